//! The two negative verdicts: no characteristic lightlike hypersurface in an
//! ambient whose restricted minor form is definite, and the dimension
//! obstruction for n = 1.

use lightframe::cli::catalog;
use lightframe::connection::christoffel;
use lightframe::hypersurface::{build_frame, characteristic_obstruction, CharacteristicVerdict, FrameRequest};

fn main() -> lightframe::Result<()> {
    let m = catalog::bundled("example-4-1.lm")?;
    match characteristic_obstruction(&m.structure) {
        CharacteristicVerdict::NonExistent { form, symbols } => println!("non-existent: Delta = {}", form.to_text(&symbols)),
        CharacteristicVerdict::NotExcluded { form, symbols } => println!("not excluded: Delta = {}", form.to_text(&symbols)),
        CharacteristicVerdict::Undetermined(why) => println!("undetermined: {why}"),
    }
    let m = catalog::bundled("example-4-3.lm")?;
    let h = m.hypersurface.as_ref().expect("hypersurface");
    let s = &m.structure;
    let req = FrameRequest { e: h.e.clone(), z: h.z.clone() };
    match build_frame(&h.immersion, s, &christoffel(s.metric()), &req) {
        Err(e) => println!("{e}"),
        Ok(_) => println!("frame built"),
    }
    Ok(())
}
