use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Generator index within a presentation.
pub type Gen = u8;

pub type Word = SmallVec<[Gen; 12]>;

/// A word over the generators, ordered degree-first, then lexicographically
/// by generator index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub Word);

impl Mono {
    pub fn one() -> Self {
        Mono(Word::new())
    }

    pub fn from_slice(w: &[Gen]) -> Self {
        Mono(Word::from_slice(w))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, o: &Mono) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&o.0);
        w
    }

    pub fn count(&self, g: Gen) -> usize {
        self.0.iter().filter(|&&x| x == g).count()
    }

    /// Render with run-length exponents, e.g. `a^2 g g*`.
    pub fn render(&self, names: &[&str]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == g {
                j += 1;
            }
            let name = names[g as usize];
            parts.push(if j - i == 1 { name.to_string() } else { format!("{name}^{}", j - i) });
            i = j;
        }
        parts.join(" ")
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mono{:?}", self.0.as_slice())
    }
}
