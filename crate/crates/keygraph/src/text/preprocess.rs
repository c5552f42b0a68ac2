//! Character-level normalization applied before tagging.

/// Normalizes raw text: lowercases, drops every character that is not a
/// letter, whitespace, hyphen, or apostrophe, and collapses whitespace runs
/// to single spaces. Idempotent.
pub fn preprocess(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut pending_space = false;
    for ch in text.to_lowercase().chars() {
        if ch.is_whitespace() {
            pending_space = true;
            continue;
        }
        if ch.is_alphabetic() || ch == '-' || ch == '\'' {
            if pending_space && !out.is_empty() {
                out.push(' ');
            }
            pending_space = false;
            out.push(ch);
        }
    }
    out
}

/// Splits normalized text into tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split_whitespace().map(str::to_owned).collect()
}
