//! Text discipline shared by the whole engine: identifier and language-tag
//! grammars, NFC normalization, and simple case folding.

use unicode_normalization::{is_nfc, UnicodeNormalization};

/// Checks the identifier grammar: a letter followed by letters, digits,
/// `-`, `_` or `.`. Identifiers under this grammar never need escaping
/// inside GMT attribute values.
pub fn is_valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.'))
}

/// Checks the language-tag grammar: a lowercase 2–3 letter primary subtag,
/// optionally followed by `-` and a two-letter uppercase region subtag
/// (e.g. `fr`, `ar`, `fr-CA`).
pub fn is_valid_lang_tag(s: &str) -> bool {
    let (primary, region) = match s.split_once('-') {
        Some((p, r)) => (p, Some(r)),
        None => (s, None),
    };
    if !(2..=3).contains(&primary.len()) || !primary.bytes().all(|b| b.is_ascii_lowercase()) {
        return false;
    }
    match region {
        None => true,
        Some(r) => r.len() == 2 && r.bytes().all(|b| b.is_ascii_uppercase()),
    }
}

/// Returns the NFC normalization of `s`, reusing the input when it is
/// already normalized.
pub fn nfc(s: &str) -> String {
    if is_nfc(s) {
        s.to_string()
    } else {
        s.nfc().collect()
    }
}

pub fn is_nfc_str(s: &str) -> bool {
    is_nfc(s)
}

/// Simple case fold: per-character default lowercase mapping, restricted to
/// one-to-one mappings so the folded string has the same character count.
/// Locale-specific folds (e.g. dotless i) and expanding folds (e.g. ß → ss)
/// are intentionally not applied.
pub fn fold_case(s: &str) -> String {
    s.chars()
        .map(|c| {
            let mut lower = c.to_lowercase();
            match (lower.next(), lower.next()) {
                (Some(l), None) => l,
                _ => c,
            }
        })
        .collect()
}

/// Index normalization: NFC followed by the simple case fold.
pub fn normalize_term_key(s: &str) -> String {
    fold_case(&nfc(s))
}
