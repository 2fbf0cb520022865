mod common;

use common::manifest;
use lightframe::cli::catalog::{bundled, bundled_text, resolve};
use lightframe::cli::{load_manifest, parse_manifest, Request};
use lightframe::Error;

fn edited(from: &str, to: &str) -> String {
    let text = bundled_text("example-4-2.lm").unwrap();
    assert!(text.contains(from), "missing `{from}`");
    text.replacen(from, to, 1)
}

fn line_of(text: &str, needle: &str) -> usize {
    text.lines().position(|l| l.contains(needle)).unwrap() + 1
}

#[test]
fn bundled_manifests_load() {
    let m = manifest("example-4-2.lm");
    assert_eq!(m.structure.dim(), 6);
    assert_eq!(m.structure.r(), 2);
    assert_eq!(m.structure.epsilons(), &[1, 1]);
    assert_eq!(m.suites, vec!["all".to_string()]);
    let h = m.hypersurface.as_ref().unwrap();
    assert_eq!(h.immersion.u_chart().dim(), 5);
    assert!(h.e.is_some() && h.z.is_some());
    let m = manifest("example-4-1.lm");
    assert_eq!(m.structure.epsilons(), &[-1, -1]);
    assert_eq!(m.request, Some(Request::Characteristic));
    let m = manifest("example-4-3.lm");
    assert_eq!((m.structure.dim(), m.structure.r()), (4, 2));
    assert!(bundled("nope.lm").is_err());
}

#[test]
fn loading_from_disk_matches_the_bundle() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/manifests/example-4-2.lm");
    let disk = load_manifest(path).unwrap();
    let mem = manifest("example-4-2.lm");
    assert_eq!(disk.structure.metric().matrix(), mem.structure.metric().matrix());
    assert_eq!(disk.structure.phi_matrix(), mem.structure.phi_matrix());
    assert!(resolve("example-4-2.lm").is_ok());
    assert!(matches!(load_manifest("/nonexistent/x.lm"), Err(Error::Io(_))));
}

#[test]
fn short_xi_is_a_dimension_error() {
    let text = edited("xi[1] = 0, 0, 0, 0, 1, 0", "xi[1] = 0, 0, 0, 0, 1");
    match parse_manifest(&text, "short.lm") {
        Err(Error::Manifest { line, message, .. }) => {
            assert_eq!(line, line_of(&text, "xi[1] ="));
            assert!(message.contains('5') && message.contains('6'), "{message}");
        }
        other => panic!("expected a manifest error, got {other:?}"),
    }
}

#[test]
fn unknown_coordinate_is_located() {
    let text = edited("g[4][4] = 1/2", "g[4][4] = 1/2 + w");
    match parse_manifest(&text, "bad.lm") {
        Err(Error::Manifest { path, line, col, message }) => {
            assert_eq!(path, "bad.lm");
            assert_eq!(line, line_of(&text, "g[4][4] ="));
            assert_eq!(col, "g[4][4] = 1/2 + ".len() + 1);
            assert!(message.contains("`w`"), "{message}");
        }
        other => panic!("expected a manifest error, got {other:?}"),
    }
}

#[test]
fn malformed_entries_are_rejected() {
    for (from, to) in [
        ("g[1][2] = -2*y1*y2", "g[1][9] = -2*y1*y2"),
        ("phi[1][3] = 1", "phi[1][3] = 1 +"),
        ("index = 2", "index = two"),
        ("epsilon = 1 1", "epsilon = 1"),
        ("f = u1 + u5, u2, u3, u1 + u5, u4, u5", "f = u1 + u5, u2, u3, u1 + u5, u4"),
        ("suites = all", "suites = everything"),
        ("[checks]", "[check]"),
    ] {
        let text = edited(from, to);
        assert!(parse_manifest(&text, "m.lm").is_err(), "`{to}` was accepted");
    }
}

#[test]
fn comments_and_quotes_are_accepted() {
    let text = edited("g[5][5] = 1", "g[5][5] = \"1\"   # quoted");
    let m = parse_manifest(&text, "q.lm").unwrap();
    assert!(m.structure.metric().entry(4, 4).is_one());
}
