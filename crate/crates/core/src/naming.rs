//! Entity naming: class and property local names, English gerunds, and
//! human-readable labels derived from CamelCase names.

use crate::rdf::Iri;

/// Verbs of two or more syllables stressed on the last one, whose final
/// consonant doubles before `-ing`.
const DOUBLING_POLYSYLLABLES: &[&str] = &[
    "abet", "abhor", "acquit", "admit", "allot", "annul", "begin", "commit", "compel", "concur",
    "confer", "control", "defer", "deter", "dispel", "emit", "equip", "excel", "expel", "forbid",
    "forget", "incur", "infer", "omit", "outrun", "patrol", "permit", "prefer", "propel", "rebel",
    "recur", "refer", "regret", "remit", "repel", "submit", "transfer", "transmit", "upset",
];

/// `-ic` verbs that take a `k` before `-ing` (panic → panicking).
const IC_TO_ICK: &[&str] = &["frolic", "mimic", "panic", "picnic", "traffic"];

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn vowel_groups(word: &str) -> usize {
    let chars: Vec<char> = word.chars().collect();
    let mut groups = 0;
    let mut in_group = false;
    for (i, &c) in chars.iter().enumerate() {
        // `u` after `q` is part of the consonant.
        let vowel = is_vowel(c) && !(c == 'u' && i > 0 && chars[i - 1] == 'q')
            || (c == 'y' && i > 0 && !is_vowel(chars[i - 1]));
        if vowel && !in_group {
            groups += 1;
        }
        in_group = vowel;
    }
    groups
}

/// Consonant-vowel-consonant ending whose last consonant can double.
fn ends_cvc(word: &str) -> bool {
    let chars: Vec<char> = word.chars().collect();
    let n = chars.len();
    if n < 2 {
        return false;
    }
    let last = chars[n - 1];
    let mid = chars[n - 2];
    if is_vowel(last) || matches!(last, 'w' | 'x' | 'y') || !is_vowel(mid) {
        return false;
    }
    match n {
        2 => false,
        _ => {
            let before = chars[n - 3];
            !is_vowel(before) || (before == 'u' && n >= 4 && chars[n - 4] == 'q')
        }
    }
}

fn gerund_lower(w: &str) -> String {
    if w == "be" {
        return "being".into();
    }
    if let Some(stem) = w.strip_suffix("ie") {
        return format!("{stem}ying");
    }
    if w.ends_with("ee") || w.ends_with("ye") || w.ends_with("oe") {
        return format!("{w}ing");
    }
    if let Some(stem) = w.strip_suffix('e') {
        if w.len() > 2 {
            return format!("{stem}ing");
        }
    }
    if IC_TO_ICK.contains(&w) {
        return format!("{w}king");
    }
    let doubles = ends_cvc(w) && (vowel_groups(w) == 1 || DOUBLING_POLYSYLLABLES.contains(&w));
    if doubles {
        let last = w.chars().last().unwrap_or_default();
        return format!("{w}{last}ing");
    }
    format!("{w}ing")
}

/// Rule-based English `-ing` form of a verb stem. The case of the first
/// letter is preserved: `Commission` → `Commissioning`, `make` → `making`.
pub fn gerund(lemma: &str) -> String {
    let Some(first) = lemma.chars().next() else {
        return String::new();
    };
    let lower = lemma.to_lowercase();
    let ing = gerund_lower(&lower);
    // Keep the original spelling of the stem and inflect only the tail.
    let common = lower
        .char_indices()
        .zip(ing.chars())
        .take_while(|((_, a), b)| a == b)
        .count();
    let kept: String = lemma.chars().take(common).collect();
    let tail: String = ing.chars().skip(common).collect();
    let mut out = format!("{kept}{tail}");
    if first.is_uppercase() {
        let mut chars = out.chars();
        out = chars
            .next()
            .map(|c| c.to_uppercase().chain(chars).collect())
            .unwrap_or_default();
    }
    out
}

/// CamelCase class name from an IRI's local name: non-alphanumeric runs
/// act as word breaks and every word is capitalised.
pub fn class_name(iri: &Iri) -> String {
    camel_from_local(iri.local_name(), true)
}

/// camelCase property-name stem from an IRI's local name.
pub fn property_stem(iri: &Iri) -> String {
    camel_from_local(iri.local_name(), false)
}

fn camel_from_local(local: &str, upper_first: bool) -> String {
    let mut out = String::new();
    for (i, part) in local
        .split(|c: char| !c.is_alphanumeric())
        .filter(|p| !p.is_empty())
        .enumerate()
    {
        if i == 0 && !upper_first {
            out.push_str(&lower_first(part));
        } else {
            out.push_str(&upper_first_char(part));
        }
    }
    if out.starts_with(|c: char| c.is_ascii_digit()) {
        out.insert(0, if upper_first { 'C' } else { 'p' });
    }
    out
}

pub fn upper_first_char(s: &str) -> String {
    let mut chars = s.chars();
    chars
        .next()
        .map(|c| c.to_uppercase().chain(chars).collect())
        .unwrap_or_default()
}

pub fn lower_first(s: &str) -> String {
    let mut chars = s.chars();
    chars
        .next()
        .map(|c| c.to_lowercase().chain(chars).collect())
        .unwrap_or_default()
}

/// Gerund class name for a frame class: the last CamelCase word is
/// inflected (`Commission` → `Commissioning`, `ChemicalRecord` →
/// `ChemicalRecording`).
pub fn gerund_class_name(frame_class: &Iri) -> String {
    let name = class_name(frame_class);
    let words = split_camel(&name);
    match words.split_last() {
        Some((last, init)) => format!("{}{}", init.concat(), gerund(last)),
        None => name,
    }
}

/// Compound class for an n-ary frame: argument class name followed by the
/// gerund of the frame class (`Component` + `Commission` →
/// `ComponentCommissioning`).
pub fn nary_class_name(frame_class: &Iri, passive_arg_class: &Iri) -> String {
    format!(
        "{}{}",
        class_name(passive_arg_class),
        gerund_class_name(frame_class)
    )
}

pub fn involves_property(class: &str) -> String {
    format!("involves{class}")
}

pub fn involved_in_property(class: &str) -> String {
    format!("is{class}InvolvedIn")
}

/// `{relation}{ObjectClassName}`, camelCase.
pub fn periphrastic_property(relation: &Iri, object_class: &str) -> String {
    format!("{}{}", property_stem(relation), object_class)
}

/// `is{Property}Of`, camelCase.
pub fn periphrastic_inverse(property: &str) -> String {
    format!("is{}Of", upper_first_char(property))
}

/// Splits a CamelCase identifier into words. Acronym runs stay together
/// (`DNASample` → `DNA`, `Sample`) and digits stick to the preceding word.
pub fn split_camel(name: &str) -> Vec<String> {
    let chars: Vec<char> = name.chars().collect();
    let mut words: Vec<String> = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        let boundary = i > 0 && c.is_uppercase() && {
            let prev = chars[i - 1];
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            prev.is_lowercase() || prev.is_ascii_digit() || (prev.is_uppercase() && next_lower)
        };
        if boundary && !current.is_empty() {
            words.push(std::mem::take(&mut current));
        }
        current.push(c);
    }
    if !current.is_empty() {
        words.push(current);
    }
    words
}

fn is_acronym(word: &str) -> bool {
    word.chars().filter(|c| c.is_alphabetic()).count() > 1
        && word.chars().all(|c| !c.is_lowercase())
}

fn lower_word(word: &str) -> String {
    if is_acronym(word) {
        word.to_owned()
    } else {
        word.to_lowercase()
    }
}

/// Sentence-case label: `ComponentCommissioning` → `Component commissioning`.
pub fn class_label(name: &str) -> String {
    let words = split_camel(name);
    let mut out: Vec<String> = Vec::with_capacity(words.len());
    for (i, w) in words.iter().enumerate() {
        if i == 0 {
            out.push(if is_acronym(w) {
                w.clone()
            } else {
                upper_first_char(&w.to_lowercase())
            });
        } else {
            out.push(lower_word(w));
        }
    }
    out.join(" ")
}

/// Lower-case label: `isComponentOfSystemOf` → `is component of system of`.
pub fn property_label(name: &str) -> String {
    split_camel(name)
        .iter()
        .map(|w| lower_word(w))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab::FRED_NS;

    fn fred(local: &str) -> Iri {
        Iri::new(format!("{FRED_NS}{local}")).unwrap()
    }

    #[test]
    fn gerunds() {
        assert_eq!(gerund("Commission"), "Commissioning");
        assert_eq!(gerund("Make"), "Making");
        assert_eq!(gerund("Record"), "Recording");
        assert_eq!(gerund("stop"), "stopping");
        assert_eq!(gerund("Run"), "Running");
        assert_eq!(gerund("see"), "seeing");
        assert_eq!(gerund("dye"), "dyeing");
        assert_eq!(gerund("die"), "dying");
        assert_eq!(gerund("be"), "being");
        assert_eq!(gerund("admit"), "admitting");
        assert_eq!(gerund("visit"), "visiting");
        assert_eq!(gerund("open"), "opening");
        assert_eq!(gerund("fix"), "fixing");
        assert_eq!(gerund("show"), "showing");
        assert_eq!(gerund("play"), "playing");
        assert_eq!(gerund("quit"), "quitting");
        assert_eq!(gerund("panic"), "panicking");
        assert_eq!(gerund("read"), "reading");
        assert_eq!(gerund("go"), "going");
    }

    #[test]
    fn compound_names() {
        assert_eq!(
            nary_class_name(&fred("Commission"), &fred("Component")),
            "ComponentCommissioning"
        );
        assert_eq!(
            nary_class_name(&fred("Record"), &fred("Level")),
            "LevelRecording"
        );
        assert_ne!(
            nary_class_name(&fred("Commission"), &fred("Component")),
            nary_class_name(&fred("Component"), &fred("Commission"))
        );
        assert_eq!(
            gerund_class_name(&fred("ChemicalRecord")),
            "ChemicalRecording"
        );
    }

    #[test]
    fn class_names_from_awkward_locals() {
        assert_eq!(class_name(&fred("water_body")), "WaterBody");
        assert_eq!(class_name(&fred("Monitor_35040000")), "Monitor35040000");
        assert_eq!(class_name(&fred("42")), "C42");
        assert_eq!(property_stem(&fred("componentOf")), "componentOf");
        assert_eq!(property_stem(&fred("PartOf")), "partOf");
    }

    #[test]
    fn property_templates() {
        assert_eq!(involves_property("Component"), "involvesComponent");
        assert_eq!(involved_in_property("Person"), "isPersonInvolvedIn");
        let p = periphrastic_property(&fred("componentOf"), "System");
        assert_eq!(p, "componentOfSystem");
        assert_eq!(periphrastic_inverse(&p), "isComponentOfSystemOf");
    }

    #[test]
    fn labels() {
        assert_eq!(
            class_label("ComponentCommissioning"),
            "Component commissioning"
        );
        assert_eq!(class_label("Component"), "Component");
        assert_eq!(class_label("DNASample"), "DNA sample");
        assert_eq!(property_label("involvesComponent"), "involves component");
        assert_eq!(
            property_label("isComponentOfSystemOf"),
            "is component of system of"
        );
        assert_eq!(
            property_label("isComponentInvolvedIn"),
            "is component involved in"
        );
        assert_eq!(split_camel("Level2Reading"), vec!["Level2", "Reading"]);
    }
}
