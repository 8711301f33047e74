//! Build-configuration guard: the library's core paths must be free of
//! floating-point types, literals, and casts. All arithmetic is integer
//! or rational. The scan covers every source file compiled into the
//! library, including inline test modules.

use std::path::{Path, PathBuf};

fn source_files() -> Vec<PathBuf> {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("src");
    let mut stack = vec![src];
    let mut out = Vec::new();
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).expect("src is readable") {
            let path = entry.expect("entry").path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == "rs") {
                out.push(path);
            }
        }
    }
    assert!(!out.is_empty(), "no sources found");
    out
}

/// Float literal shapes like 1.5, 2e3, 1_000.0; excludes field access and
/// integer tokens.
fn has_float_literal(line: &str) -> bool {
    let bytes = line.as_bytes();
    for (i, w) in bytes.windows(2).enumerate() {
        if w[0] == b'.' && w[1].is_ascii_digit() {
            // digit '.' digit with no identifier char before the dot
            if i > 0 && bytes[i - 1].is_ascii_digit() {
                let before = if i >= 2 { bytes[i - 2] } else { b' ' };
                if !before.is_ascii_alphabetic() && before != b'_' {
                    return true;
                }
            }
        }
    }
    false
}

/// Drops string literal contents; tests may mention rejected inputs like
/// "1.5" as data without performing float arithmetic.
fn strip_strings(line: &str) -> String {
    let mut out = String::new();
    let mut in_str = false;
    let mut escape = false;
    for c in line.chars() {
        if in_str {
            if escape {
                escape = false;
            } else if c == '\\' {
                escape = true;
            } else if c == '"' {
                in_str = false;
            }
        } else if c == '"' {
            in_str = true;
        } else {
            out.push(c);
        }
    }
    out
}

#[test]
fn core_paths_are_float_free() {
    let mut offences = Vec::new();
    for path in source_files() {
        let text = std::fs::read_to_string(&path).expect("source is readable");
        for (ln, line) in text.lines().enumerate() {
            let stripped = strip_strings(line);
            let code = stripped.split("//").next().unwrap_or(&stripped);
            for token in ["f32", "f64"] {
                let mut rest = code;
                while let Some(pos) = rest.find(token) {
                    let before_ok = rest[..pos]
                        .chars()
                        .next_back()
                        .is_none_or(|c| !c.is_alphanumeric() && c != '_');
                    let after_ok = rest[pos + token.len()..]
                        .chars()
                        .next()
                        .is_none_or(|c| !c.is_alphanumeric() && c != '_');
                    if before_ok && after_ok {
                        offences.push(format!("{}:{}: {token}", path.display(), ln + 1));
                    }
                    rest = &rest[pos + token.len()..];
                }
            }
            if has_float_literal(code) {
                offences.push(format!(
                    "{}:{}: float literal in {code:?}",
                    path.display(),
                    ln + 1
                ));
            }
        }
    }
    assert!(
        offences.is_empty(),
        "floating point in core paths:\n{}",
        offences.join("\n")
    );
}

#[test]
fn dependencies_stay_exact() {
    let manifest = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("Cargo.toml"),
    )
    .unwrap();
    // no approximate-arithmetic crates may sneak in
    for banned in ["nalgebra", "ndarray", "approx =", "float"] {
        assert!(
            !manifest.contains(banned),
            "Cargo.toml mentions {banned:?}"
        );
    }
    for required in ["num-bigint", "num-rational"] {
        assert!(
            manifest.contains(required),
            "exact arithmetic dependency {required:?} missing"
        );
    }
}
