//! Concrete transducers for the catalog witnesses.

use crate::strings::Alphabet;
use crate::transducer::{LinearBound, MachineSpec};

const BITS: [&str; 2] = ["0", "1"];

fn bound(a: u64, b: u64) -> LinearBound {
    LinearBound::new(a, b).expect("positive bound")
}

fn alpha(chars: &str) -> Alphabet {
    Alphabet::from_chars(chars).expect("witness alphabet")
}

/// PAL_sub(w) = { x : w = uxv, x = xᴿ }.
///
/// Skip u, push the first half of x while emitting it, guess the centre,
/// pop-compare the second half while emitting it, then skip v.
pub fn pal_sub() -> MachineSpec {
    let mut m = MachineSpec::new(
        "pal_sub",
        alpha("01"),
        alpha("Z01"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 5),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "skip", "Z", "λ")
    .trans("skip", "λ", "Z", "push", "Z", "λ")
    .trans("pop", "λ", "Z", "rest", "Z", "λ")
    .trans("rest", "$", "Z", "acc", "Z", "λ");
    for s in BITS {
        m = m
            .trans("skip", s, "Z", "skip", "Z", "λ")
            .trans("pop", s, s, "pop", "λ", s)
            .trans("rest", s, "Z", "rest", "Z", "λ");
        for t in ["Z", "0", "1"] {
            m = m
                .trans("push", s, t, "push", &format!("{s}{t}"), s)
                .trans("push", s, t, "pop", t, s);
        }
    }
    for t in ["Z", "0", "1"] {
        m = m.trans("push", "λ", t, "pop", t, "λ");
    }
    m
}

fn palindrome_branch(mut m: MachineSpec, emit_on_accept: &str) -> MachineSpec {
    m = m.trans("q0", "¢", "Z", "push", "Z", "λ").trans(
        "pop",
        "$",
        "Z",
        "acc",
        "Z",
        emit_on_accept,
    );
    for t in ["Z", "0", "1"] {
        m = m.trans("push", "λ", t, "pop", t, "λ");
        for s in BITS {
            m = m
                .trans("push", s, t, "push", &format!("{s}{t}"), "λ")
                .trans("push", s, t, "pop", t, "λ");
        }
    }
    for s in BITS {
        m = m.trans("pop", s, s, "pop", "λ", "λ");
    }
    m
}

/// η for the palindromes over {0,1}.
pub fn eta_palindromes() -> MachineSpec {
    let m = MachineSpec::new(
        "eta_pal",
        alpha("01"),
        alpha("Z01"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 4),
    )
    .accepting(&["acc"]);
    palindrome_branch(m, "1")
}

/// χ for the palindromes over {0,1}: the palindrome branch emits 1; a
/// second branch finds a mismatched pair w_i ≠ w_{n-1-i} and emits 0.
pub fn chi_palindromes() -> MachineSpec {
    let m = MachineSpec::new(
        "chi_pal",
        alpha("01"),
        alpha("Z01"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 4),
    )
    .accepting(&["acc"]);
    let mut m = palindrome_branch(m, "1")
        .trans("q0", "¢", "Z", "npush", "Z", "λ")
        .trans("npop", "$", "Z", "acc", "Z", "0");
    for t in ["Z", "0", "1"] {
        for s in BITS {
            m = m
                .trans("npush", s, t, "npush", &format!("{s}{t}"), "λ")
                .trans("npush", s, t, &format!("seen{s}"), t, "λ");
            for r in BITS {
                m = m.trans(&format!("seen{s}"), r, t, &format!("seen{s}"), t, "λ");
                if r != s {
                    m = m.trans(&format!("seen{s}"), r, t, "npop", t, "λ");
                }
            }
        }
    }
    for r in BITS {
        for s in BITS {
            m = m.trans("npop", r, s, "npop", "λ", "λ");
        }
    }
    m
}

/// η for Σ* over {0,1}: reads everything and emits 1.
pub fn eta_all() -> MachineSpec {
    let mut m = MachineSpec::new(
        "eta_all",
        alpha("01"),
        alpha("Z"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 2),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "s", "Z", "λ")
    .trans("s", "$", "Z", "acc", "Z", "1");
    for s in BITS {
        m = m.trans("s", s, "Z", "s", "Z", "λ");
    }
    m
}

/// Reads its input and always rejects.
pub fn reject_all() -> MachineSpec {
    let mut m = MachineSpec::new(
        "reject_all",
        alpha("01"),
        alpha("Z"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 2),
    )
    .accepting(&["acc"])
    .rejecting(&["rej"])
    .trans("q0", "¢", "Z", "s", "Z", "λ")
    .trans("s", "$", "Z", "rej", "Z", "λ");
    for s in BITS {
        m = m.trans("s", s, "Z", "s", "Z", "λ");
    }
    m
}

/// η for L_pal = { x#xᴿ : x ∈ {0,1}* }.
pub fn l_pal() -> MachineSpec {
    let mut m = MachineSpec::new(
        "l_pal",
        alpha("01#"),
        alpha("Z01"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 2),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "push", "Z", "λ")
    .trans("pop", "$", "Z", "acc", "Z", "1");
    for t in ["Z", "0", "1"] {
        m = m.trans("push", "#", t, "pop", t, "λ");
        for s in BITS {
            m = m.trans("push", s, t, "push", &format!("{s}{t}"), "λ");
        }
    }
    for s in BITS {
        m = m.trans("pop", s, s, "pop", "λ", "λ");
    }
    m
}

/// Advice function h(x#y) = y; inputs without exactly one `#` map to λ.
/// Stack-free and single-valued total.
pub fn dup_hash_advice() -> MachineSpec {
    let mut m = MachineSpec::new(
        "dup_hash_advice",
        alpha("01#"),
        alpha("Z"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 2),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "before", "Z", "λ")
    .trans("before", "#", "Z", "copy", "Z", "λ")
    .trans("copy", "$", "Z", "acc", "Z", "λ")
    .trans("q0", "¢", "Z", "m0", "Z", "λ")
    .trans("m0", "#", "Z", "m1", "Z", "λ")
    .trans("m1", "#", "Z", "m2", "Z", "λ")
    .trans("m2", "#", "Z", "m2", "Z", "λ")
    .trans("m0", "$", "Z", "acc", "Z", "λ")
    .trans("m2", "$", "Z", "acc", "Z", "λ");
    for s in BITS {
        m = m
            .trans("before", s, "Z", "before", "Z", "λ")
            .trans("copy", s, "Z", "copy", "Z", s);
        for q in ["m0", "m1", "m2"] {
            m = m.trans(q, s, "Z", q, "Z", "λ");
        }
    }
    m
}

/// Track checker B over ⟨w, y⟩ with w ∈ {0,1,#}*, y ∈ {0,1}*: accepts
/// iff w = x#z with x = y, i.e. the upper track up to its `#` equals the
/// lower track and the rest of the lower track is padding.
pub fn dup_hash_track_checker() -> MachineSpec {
    let input = Alphabet::track(&alpha("01#"), &alpha("01"));
    let mut m = MachineSpec::new(
        "dup_hash_track",
        input,
        alpha("Z"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 2),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "eq", "Z", "λ")
    .trans("eq", "⟨\\#,#⟩", "Z", "rest", "Z", "λ")
    .trans("rest", "$", "Z", "acc", "Z", "λ");
    for s in BITS {
        m = m
            .trans("eq", &format!("⟨{s},{s}⟩"), "Z", "eq", "Z", "λ")
            .trans("rest", &format!("⟨{s},#⟩"), "Z", "rest", "Z", "λ");
    }
    m
}

/// g(x) = { x♮xᴿ } on binary x; inputs containing ♮ map to λ.
pub fn dup_reverse() -> MachineSpec {
    let mut m = MachineSpec::new(
        "dup_reverse",
        alpha("01♮"),
        alpha("Z01"),
        alpha("01♮"),
        "q0",
        "Z",
        bound(2, 3),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "copy", "Z", "λ")
    .trans("rev", "λ", "Z", "acc", "Z", "λ")
    .trans("q0", "¢", "Z", "m0", "Z", "λ")
    .trans("m0", "♮", "Z", "m1", "Z", "λ")
    .trans("m1", "♮", "Z", "m1", "Z", "λ")
    .trans("m1", "$", "Z", "acc", "Z", "λ");
    for t in ["Z", "0", "1"] {
        m = m.trans("copy", "$", t, "rev", t, "♮");
        for s in BITS {
            m = m.trans("copy", s, t, "copy", &format!("{s}{t}"), s);
        }
    }
    for s in BITS {
        m = m
            .trans("rev", "λ", s, "rev", "λ", s)
            .trans("m0", s, "Z", "m0", "Z", "λ")
            .trans("m1", s, "Z", "m1", "Z", "λ");
    }
    m
}

/// f(u♮v) = { u♮vᴿ } on binary u, v; other inputs map to λ.
pub fn reverse_tail() -> MachineSpec {
    let mut m = MachineSpec::new(
        "reverse_tail",
        alpha("01♮"),
        alpha("Z01"),
        alpha("01♮"),
        "q0",
        "Z",
        bound(2, 4),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "cu", "Z", "λ")
    .trans("cu", "♮", "Z", "pv", "Z", "♮")
    .trans("rv", "λ", "Z", "acc", "Z", "λ")
    .trans("q0", "¢", "Z", "m0", "Z", "λ")
    .trans("m0", "♮", "Z", "m1", "Z", "λ")
    .trans("m1", "♮", "Z", "m2", "Z", "λ")
    .trans("m2", "♮", "Z", "m2", "Z", "λ")
    .trans("m0", "$", "Z", "acc", "Z", "λ")
    .trans("m2", "$", "Z", "acc", "Z", "λ");
    for t in ["Z", "0", "1"] {
        m = m.trans("pv", "$", t, "rv", t, "λ");
        for s in BITS {
            m = m.trans("pv", s, t, "pv", &format!("{s}{t}"), "λ");
        }
    }
    for s in BITS {
        m = m
            .trans("cu", s, "Z", "cu", "Z", s)
            .trans("rv", "λ", s, "rv", "λ", s);
        for q in ["m0", "m1", "m2"] {
            m = m.trans(q, s, "Z", q, "Z", "λ");
        }
    }
    m
}

/// Turing-mode base machine for the square-substring function: guesses
/// w = u·x·x'·v, emits x, writes u♮x♮x'♮v on the query tape and accepts
/// iff the oracle says yes.
pub fn square_substring_base() -> MachineSpec {
    let mut m = MachineSpec::new(
        "square_base",
        alpha("01"),
        alpha("Z"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 7),
    )
    .accepting(&["acc"])
    .rejecting(&["rej"])
    .turing(alpha("01♮"), "qq", "qy", "qn")
    .trans_q("q0", "¢", "Z", "u", "Z", "λ", "λ")
    .trans_q("u", "λ", "Z", "x", "Z", "λ", "♮")
    .trans_q("x", "λ", "Z", "y", "Z", "λ", "♮")
    .trans_q("y", "λ", "Z", "v", "Z", "λ", "♮")
    .trans_q("v", "$", "Z", "qq", "Z", "λ", "λ")
    .trans_q("qy", "λ", "Z", "acc", "Z", "λ", "λ")
    .trans_q("qn", "λ", "Z", "rej", "Z", "λ", "λ");
    for s in BITS {
        m = m
            .trans_q("u", s, "Z", "u", "Z", "λ", s)
            .trans_q("x", s, "Z", "x", "Z", s, s)
            .trans_q("y", s, "Z", "y", "Z", "λ", s)
            .trans_q("v", s, "Z", "v", "Z", "λ", s);
    }
    m
}

/// Recognizes the words over {0,1,♮} that are NOT of the form u♮x♮x♮v with
/// u, x, v binary: the ♮-count differs from 3, or the two middle blocks
/// differ in length, or they differ at some position.
pub fn square_substring_chain() -> MachineSpec {
    let mut m = MachineSpec::new(
        "square_chain",
        alpha("01♮"),
        alpha("ZA"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 2),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "c0", "Z", "λ")
    .trans("q0", "¢", "Z", "lu", "Z", "λ")
    .trans("q0", "¢", "Z", "du", "Z", "λ");
    // ♮-count ≠ 3.
    for k in 0..=4 {
        let here = format!("c{k}");
        let next = format!("c{}", (k + 1).min(4));
        m = m.trans(&here, "♮", "Z", &next, "Z", "λ");
        for s in BITS {
            m = m.trans(&here, s, "Z", &here, "Z", "λ");
        }
        if k != 3 {
            m = m.trans(&here, "$", "Z", "acc", "Z", "λ");
        }
    }
    // |x| ≠ |y|: push one A per x symbol, pop one per y symbol.
    m = m
        .trans("lu", "♮", "Z", "lx", "Z", "λ")
        .trans("ly", "♮", "A", "lv", "A", "λ")
        .trans("long", "♮", "Z", "lv", "Z", "λ");
    for t in ["Z", "A"] {
        m = m
            .trans("lx", "♮", t, "ly", t, "λ")
            .trans("lv", "$", t, "acc", t, "λ");
    }
    for s in BITS {
        m = m
            .trans("lu", s, "Z", "lu", "Z", "λ")
            .trans("ly", s, "A", "ly", "λ", "λ")
            .trans("ly", s, "Z", "long", "Z", "λ")
            .trans("long", s, "Z", "long", "Z", "λ");
        for t in ["Z", "A"] {
            m = m
                .trans("lx", s, t, "lx", &format!("A{t}"), "λ")
                .trans("lv", s, t, "lv", t, "λ");
        }
    }
    // x_i ≠ y_i for some i: push i A's, remember x_i, pop i on y, compare.
    m = m
        .trans("du", "♮", "Z", "dx", "Z", "λ")
        .trans("dr", "♮", "Z", "dv", "Z", "λ")
        .trans("dv", "$", "Z", "acc", "Z", "λ");
    for s in BITS {
        let (seen, ymode) = (format!("da{s}"), format!("dy{s}"));
        m = m
            .trans("du", s, "Z", "du", "Z", "λ")
            .trans("dr", s, "Z", "dr", "Z", "λ")
            .trans("dv", s, "Z", "dv", "Z", "λ");
        for t in ["Z", "A"] {
            m = m
                .trans("dx", s, t, "dx", &format!("A{t}"), "λ")
                .trans("dx", s, t, &seen, t, "λ")
                .trans(&seen, "♮", t, &ymode, t, "λ");
            for r in BITS {
                m = m.trans(&seen, r, t, &seen, t, "λ");
            }
        }
        for r in BITS {
            m = m.trans(&ymode, r, "A", &ymode, "λ", "λ");
            if r != s {
                m = m.trans(&ymode, r, "Z", "dr", "Z", "λ");
            }
        }
    }
    m
}

/// g(w) = {λ} ∪ { x_i y_i : w = x₁♮x₂♮x₃#y₁♮y₂♮y₃, x_i = y_iᴿ }.
pub fn prop8_g() -> MachineSpec {
    let mut m = MachineSpec::new(
        "prop8_g",
        alpha("01♮#"),
        alpha("Z01"),
        alpha("01"),
        "q0",
        "Z",
        bound(1, 2),
    )
    .accepting(&["acc"])
    .trans("q0", "¢", "Z", "any", "Z", "λ")
    .trans("any", "$", "Z", "acc", "Z", "λ");
    for s in ["0", "1", "♮", "#"] {
        m = m.trans("any", s, "Z", "any", "Z", "λ");
    }
    // Segments 0..=2 are x₁..x₃, 3..=5 are y₁..y₃.
    let separator = ["♮", "♮", "#", "♮", "♮", "$"];
    for i in 0..3 {
        let (left, right) = (i, i + 3);
        let state = |j: usize| format!("g{}_{j}", i + 1);
        m = m.trans("q0", "¢", "Z", &state(0), "Z", "λ");
        for (j, sep) in separator.iter().enumerate() {
            let here = state(j);
            let next = if j == 5 {
                "acc".to_string()
            } else {
                state(j + 1)
            };
            for s in BITS {
                for t in ["Z", "0", "1"] {
                    if j == left {
                        m = m.trans(&here, s, t, &here, &format!("{s}{t}"), s);
                    } else if j != right {
                        m = m.trans(&here, s, t, &here, t, "λ");
                    }
                }
                if j == right {
                    m = m.trans(&here, s, s, &here, "λ", s);
                }
            }
            let tops: &[&str] = if j == right { &["Z"] } else { &["Z", "0", "1"] };
            for t in tops {
                m = m.trans(&here, sep, t, &next, t, "λ");
            }
        }
    }
    m
}

/// Every machine shipped in the `machines/` corpus, by file stem.
pub fn corpus() -> Vec<(&'static str, MachineSpec)> {
    vec![
        ("pal_sub", pal_sub()),
        ("eta_pal", eta_palindromes()),
        ("chi_pal", chi_palindromes()),
        ("eta_all", eta_all()),
        ("reject_all", reject_all()),
        ("l_pal", l_pal()),
        ("dup_hash_advice", dup_hash_advice()),
        ("dup_hash_track", dup_hash_track_checker()),
        ("dup_reverse", dup_reverse()),
        ("reverse_tail", reverse_tail()),
        ("square_base", square_substring_base()),
        ("square_chain", square_substring_chain()),
        ("prop8_g", prop8_g()),
    ]
}
