//! Rule-based fallback tagger: a closed-class lexicon plus suffix rules,
//! defaulting to noun. Needs no model file.

use std::collections::HashMap;

use super::Tagger;

const LEXICON: &[(&str, &str)] = &[
    // Determiners.
    ("the", "DT"), ("a", "DT"), ("an", "DT"), ("this", "DT"), ("that", "DT"),
    ("these", "DT"), ("those", "DT"), ("each", "DT"), ("every", "DT"), ("either", "DT"),
    ("neither", "DT"), ("some", "DT"), ("any", "DT"), ("no", "DT"), ("all", "DT"),
    ("both", "DT"), ("another", "DT"),
    // Prepositions and subordinating conjunctions.
    ("of", "IN"), ("in", "IN"), ("on", "IN"), ("at", "IN"), ("by", "IN"),
    ("for", "IN"), ("with", "IN"), ("from", "IN"), ("into", "IN"), ("onto", "IN"),
    ("over", "IN"), ("under", "IN"), ("between", "IN"), ("among", "IN"), ("through", "IN"),
    ("during", "IN"), ("without", "IN"), ("within", "IN"), ("against", "IN"), ("about", "IN"),
    ("across", "IN"), ("behind", "IN"), ("beyond", "IN"), ("toward", "IN"), ("towards", "IN"),
    ("upon", "IN"), ("since", "IN"), ("until", "IN"), ("after", "IN"), ("before", "IN"),
    ("above", "IN"), ("below", "IN"), ("near", "IN"), ("than", "IN"), ("as", "IN"),
    ("inside", "IN"), ("outside", "IN"), ("throughout", "IN"),
    ("if", "IN"), ("because", "IN"), ("while", "IN"), ("whereas", "IN"), ("although", "IN"),
    ("though", "IN"), ("per", "IN"), ("via", "IN"), ("unlike", "IN"), ("like", "IN"),
    // Coordinating conjunctions.
    ("and", "CC"), ("or", "CC"), ("but", "CC"), ("nor", "CC"), ("yet", "CC"), ("so", "CC"),
    ("to", "TO"),
    // Modals.
    ("can", "MD"), ("could", "MD"), ("may", "MD"), ("might", "MD"), ("must", "MD"),
    ("shall", "MD"), ("should", "MD"), ("will", "MD"), ("would", "MD"),
    // Pronouns.
    ("i", "PRP"), ("you", "PRP"), ("he", "PRP"), ("she", "PRP"), ("it", "PRP"),
    ("we", "PRP"), ("they", "PRP"), ("me", "PRP"), ("him", "PRP"), ("her", "PRP"),
    ("us", "PRP"), ("them", "PRP"), ("itself", "PRP"), ("themselves", "PRP"),
    ("my", "PRP$"), ("your", "PRP$"), ("his", "PRP$"), ("its", "PRP$"), ("our", "PRP$"),
    ("their", "PRP$"),
    ("there", "EX"),
    // Wh-words.
    ("which", "WDT"), ("who", "WP"), ("what", "WP"), ("whom", "WP"), ("whose", "WP$"),
    ("when", "WRB"), ("where", "WRB"), ("why", "WRB"), ("how", "WRB"),
    // Common adverbs.
    ("not", "RB"), ("very", "RB"), ("also", "RB"), ("often", "RB"), ("never", "RB"),
    ("always", "RB"), ("already", "RB"), ("still", "RB"), ("too", "RB"), ("quite", "RB"),
    ("rather", "RB"), ("almost", "RB"), ("nearly", "RB"), ("perhaps", "RB"), ("however", "RB"),
    ("therefore", "RB"), ("thus", "RB"), ("moreover", "RB"), ("furthermore", "RB"),
    ("instead", "RB"), ("otherwise", "RB"), ("then", "RB"), ("now", "RB"), ("here", "RB"),
    ("only", "RB"), ("just", "RB"), ("even", "RB"), ("well", "RB"), ("again", "RB"),
    ("respectively", "RB"), ("further", "RB"),
    // Forms of be, have, do.
    ("is", "VBZ"), ("are", "VBP"), ("was", "VBD"), ("were", "VBD"), ("be", "VB"),
    ("been", "VBN"), ("being", "VBG"), ("am", "VBP"), ("has", "VBZ"), ("have", "VBP"),
    ("had", "VBD"), ("do", "VBP"), ("does", "VBZ"), ("did", "VBD"),
    // Irregular past forms.
    ("sat", "VBD"), ("ran", "VBD"), ("went", "VBD"), ("said", "VBD"), ("made", "VBD"),
    ("took", "VBD"), ("came", "VBD"), ("gave", "VBD"), ("found", "VBD"), ("got", "VBD"),
    ("saw", "VBD"), ("knew", "VBD"), ("thought", "VBD"), ("became", "VBD"), ("left", "VBD"),
    ("felt", "VBD"), ("kept", "VBD"), ("held", "VBD"), ("brought", "VBD"), ("began", "VBD"),
    ("wrote", "VBD"), ("stood", "VBD"), ("heard", "VBD"), ("met", "VBD"), ("paid", "VBD"),
    ("sent", "VBD"), ("built", "VBD"), ("spent", "VBD"), ("lost", "VBD"), ("told", "VBD"),
    ("showed", "VBD"), ("grew", "VBD"), ("drew", "VBD"), ("rose", "VBD"), ("fell", "VBD"),
    ("sought", "VBD"), ("taught", "VBD"), ("caught", "VBD"), ("chose", "VBD"),
    // Common verbs that would otherwise default to noun.
    ("propose", "VBP"), ("present", "VBP"), ("show", "VBP"), ("describe", "VBP"),
    ("introduce", "VBP"), ("use", "VBP"), ("apply", "VBP"), ("obtain", "VBP"),
    ("achieve", "VBP"), ("outperform", "VBP"), ("demonstrate", "VBP"), ("evaluate", "VBP"),
    ("compare", "VBP"), ("require", "VBP"), ("provide", "VBP"), ("yield", "VBP"),
    ("remain", "VBP"), ("improve", "VBP"), ("depend", "VBP"), ("consist", "VBP"),
    ("come", "VBP"), ("go", "VBP"), ("make", "VBP"), ("take", "VBP"), ("give", "VBP"),
    ("become", "VBP"), ("include", "VBP"), ("contain", "VBP"), ("produce", "VBP"),
    ("perform", "VBP"), ("allow", "VBP"), ("reduce", "VBP"), ("increase", "VBP"),
    ("learn", "VBP"), ("generate", "VBP"), ("read", "VBP"), ("help", "VBP"),
    ("remove", "VBP"), ("decrease", "VBP"), ("keep", "VBP"), ("explore", "VBP"),
    ("capture", "VBP"), ("build", "VBP"), ("grow", "VBP"), ("connect", "VBP"),
    ("need", "VBP"), ("measure", "VBP"), ("move", "VBP"), ("matter", "VBP"),
    ("appear", "VBP"), ("stay", "VBP"), ("confirm", "VBP"), ("compute", "VBP"),
    ("visit", "VBP"), ("train", "VBP"), ("report", "VBP"), ("suggest", "VBP"),
    ("leave", "VBP"), ("disagree", "VBP"), ("differ", "VBP"), ("share", "VBP"),
    // VBZ counterparts, skipping forms the corpus uses as plural nouns.
    ("learns", "VBZ"), ("generates", "VBZ"), ("reads", "VBZ"), ("helps", "VBZ"),
    ("removes", "VBZ"), ("decreases", "VBZ"), ("keeps", "VBZ"), ("explores", "VBZ"),
    ("captures", "VBZ"), ("builds", "VBZ"), ("grows", "VBZ"), ("connects", "VBZ"),
    ("needs", "VBZ"), ("measures", "VBZ"), ("moves", "VBZ"), ("matters", "VBZ"),
    ("appears", "VBZ"), ("stays", "VBZ"), ("confirms", "VBZ"), ("computes", "VBZ"),
    ("visits", "VBZ"), ("works", "VBZ"), ("scales", "VBZ"), ("merges", "VBZ"),
    ("controls", "VBZ"), ("bounds", "VBZ"), ("runs", "VBZ"), ("processes", "VBZ"),
    ("updates", "VBZ"), ("follows", "VBZ"), ("decays", "VBZ"),
    ("proposes", "VBZ"), ("presents", "VBZ"), ("shows", "VBZ"), ("describes", "VBZ"),
    ("introduces", "VBZ"), ("uses", "VBZ"), ("applies", "VBZ"), ("obtains", "VBZ"),
    ("achieves", "VBZ"), ("outperforms", "VBZ"), ("demonstrates", "VBZ"), ("evaluates", "VBZ"),
    ("compares", "VBZ"), ("requires", "VBZ"), ("provides", "VBZ"), ("yields", "VBZ"),
    ("remains", "VBZ"), ("improves", "VBZ"), ("depends", "VBZ"), ("consists", "VBZ"),
    ("comes", "VBZ"), ("goes", "VBZ"), ("makes", "VBZ"), ("takes", "VBZ"), ("gives", "VBZ"),
    ("becomes", "VBZ"), ("includes", "VBZ"), ("contains", "VBZ"), ("produces", "VBZ"),
    ("performs", "VBZ"), ("allows", "VBZ"), ("reduces", "VBZ"), ("increases", "VBZ"),
    // Common adjectives with no reliable suffix.
    ("quick", "JJ"), ("good", "JJ"), ("new", "JJ"), ("first", "JJ"), ("last", "JJ"),
    ("long", "JJ"), ("great", "JJ"), ("little", "JJ"), ("own", "JJ"), ("other", "JJ"),
    ("old", "JJ"), ("right", "JJ"), ("big", "JJ"), ("high", "JJ"), ("small", "JJ"),
    ("large", "JJ"), ("next", "JJ"), ("early", "JJ"), ("young", "JJ"), ("important", "JJ"),
    ("few", "JJ"), ("public", "JJ"), ("bad", "JJ"), ("same", "JJ"), ("able", "JJ"),
    ("low", "JJ"), ("late", "JJ"), ("hard", "JJ"), ("major", "JJ"), ("better", "JJR"),
    ("best", "JJS"), ("strong", "JJ"), ("possible", "JJ"), ("recent", "JJ"), ("common", "JJ"),
    ("simple", "JJ"), ("single", "JJ"), ("novel", "JJ"), ("robust", "JJ"), ("efficient", "JJ"),
    ("effective", "JJ"), ("significant", "JJ"), ("various", "JJ"), ("several", "JJ"),
    ("key", "JJ"), ("main", "JJ"), ("deep", "JJ"), ("such", "JJ"), ("many", "JJ"),
    ("more", "JJR"), ("most", "JJS"), ("less", "JJR"), ("brown", "JJ"), ("lazy", "JJ"),
    // Number words.
    ("one", "CD"), ("two", "CD"), ("three", "CD"), ("four", "CD"), ("five", "CD"),
    ("six", "CD"), ("seven", "CD"), ("eight", "CD"), ("nine", "CD"), ("ten", "CD"),
    ("hundred", "CD"), ("thousand", "CD"), ("million", "CD"),
];

/// Lexicon-plus-suffix-rules tagger. Open-class words fall back to suffix
/// heuristics, then to NN.
pub struct LexiconTagger {
    lexicon: HashMap<&'static str, &'static str>,
}

impl LexiconTagger {
    pub fn new() -> Self {
        LexiconTagger {
            lexicon: LEXICON.iter().copied().collect(),
        }
    }

    fn tag_word(&self, word: &str) -> &'static str {
        if let Some(tag) = self.lexicon.get(word) {
            return tag;
        }
        let chars = word.chars().count();
        if word.ends_with("ing") && chars > 4 {
            return "VBG";
        }
        if word.ends_with("ed") && chars > 3 {
            return "VBN";
        }
        if word.ends_with("ly") && chars > 3 {
            return "RB";
        }
        if word.ends_with("ous") && chars > 4 {
            return "JJ";
        }
        if word.ends_with('s') && !word.ends_with("ss") && !word.ends_with("us") && chars > 3 {
            return "NNS";
        }
        "NN"
    }
}

impl Default for LexiconTagger {
    fn default() -> Self {
        LexiconTagger::new()
    }
}

impl Tagger for LexiconTagger {
    fn tag_sequence(&self, words: &[String]) -> Vec<String> {
        words.iter().map(|w| self.tag_word(w).to_owned()).collect()
    }
}
