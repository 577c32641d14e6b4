//! Published rankings on the fixed test matrix, used as golden targets and
//! for side-by-side reports.

use crate::ranking::Method;

/// Full-availability ranking under the VoIP weights.
pub fn voip_order(method: Method) -> [&'static str; 6] {
    match method {
        Method::Topsis => ["N(3)", "N(2)", "N(0)", "N(1)", "N(5)", "N(4)"],
        Method::Ahp => ["N(3)", "N(2)", "N(0)", "N(4)", "N(1)", "N(5)"],
        Method::Wpm => ["N(3)", "N(2)", "N(0)", "N(1)", "N(5)", "N(4)"],
        Method::Saw => ["N(3)", "N(2)", "N(0)", "N(1)", "N(5)", "N(4)"],
        Method::Msaw => ["N(3)", "N(2)", "N(4)", "N(5)", "N(0)", "N(1)"],
    }
}

/// Full-availability ranking under the video weights.
pub fn video_order(method: Method) -> [&'static str; 6] {
    match method {
        Method::Topsis => ["N(5)", "N(4)", "N(2)", "N(3)", "N(1)", "N(0)"],
        Method::Ahp => ["N(2)", "N(3)", "N(5)", "N(4)", "N(1)", "N(0)"],
        Method::Wpm => ["N(4)", "N(5)", "N(3)", "N(2)", "N(1)", "N(0)"],
        Method::Saw => ["N(4)", "N(2)", "N(0)", "N(3)", "N(5)", "N(1)"],
        Method::Msaw => ["N(4)", "N(2)", "N(3)", "N(5)", "N(1)", "N(0)"],
    }
}

/// Ranking under the VoIP weights once N(4) is unavailable.
pub fn voip_without_n4_order(method: Method) -> [&'static str; 5] {
    match method {
        Method::Topsis => ["N(5)", "N(3)", "N(2)", "N(0)", "N(1)"],
        Method::Ahp => ["N(0)", "N(1)", "N(5)", "N(3)", "N(2)"],
        Method::Wpm => ["N(5)", "N(3)", "N(2)", "N(0)", "N(1)"],
        Method::Saw => ["N(1)", "N(3)", "N(2)", "N(0)", "N(5)"],
        Method::Msaw => ["N(3)", "N(2)", "N(5)", "N(0)", "N(1)"],
    }
}
