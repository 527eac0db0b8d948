//! Normal forms in `PSL₂(ℤ) = ⟨U, V | U², V³⟩`.
//!
//! Every element has a unique reduced word alternating between `U` and
//! `V^{±1}`; conjugacy classes are read off from the cyclically reduced
//! form. With `L = (UV)⁻¹` and `R = (UV²)⁻¹` in `PSL₂`, a cyclically reduced
//! word `U V^{e₁} U V^{e₂} …` of a hyperbolic class spells its LR-word with
//! `e = 1 ↦ R` and `e = 2 ↦ L`.

use std::fmt;

use crate::psl2::{Letter, LrWord, Mat2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    U,
    /// `V^e` with `e ∈ {1, 2}`.
    V(u8),
}

impl Syllable {
    fn same_kind(self, other: Syllable) -> bool {
        matches!(
            (self, other),
            (Syllable::U, Syllable::U) | (Syllable::V(_), Syllable::V(_))
        )
    }

    // Product of two syllables of the same kind; `None` is the identity.
    fn merge(self, other: Syllable) -> Option<Syllable> {
        match (self, other) {
            (Syllable::U, Syllable::U) => None,
            (Syllable::V(a), Syllable::V(b)) => match (a + b) % 3 {
                0 => None,
                e => Some(Syllable::V(e)),
            },
            _ => unreachable!("merge of different syllable kinds"),
        }
    }

    fn inverse(self) -> Syllable {
        match self {
            Syllable::U => Syllable::U,
            Syllable::V(e) => Syllable::V(3 - e),
        }
    }
}

/// A freely reduced word in the free product `ℤ/2 * ℤ/3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModularWord(Vec<Syllable>);

/// Conjugacy type of an element of `PSL₂(ℤ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyClass {
    Identity,
    Elliptic {
        order: u8,
    },
    /// Conjugate to `L^k` (`k > 0`) or `L^{-k}`, recorded by the signed power.
    Parabolic {
        power: i64,
    },
    /// Primitive-or-not hyperbolic class with its cyclic-canonical LR-word.
    Hyperbolic(LrWord),
}

impl ModularWord {
    pub fn identity() -> Self {
        ModularWord(Vec::new())
    }

    pub fn from_syllables(syllables: impl IntoIterator<Item = Syllable>) -> Self {
        let mut w = ModularWord::identity();
        for s in syllables {
            w.push(s);
        }
        w
    }

    /// `L ↦ V²U`, `R ↦ VU`, `L⁻¹ ↦ UV`, `R⁻¹ ↦ UV²`.
    pub fn from_letter(letter: Letter, inverse: bool) -> Self {
        use Syllable::{U, V};
        let s: [Syllable; 2] = match (letter, inverse) {
            (Letter::L, false) => [V(2), U],
            (Letter::R, false) => [V(1), U],
            (Letter::L, true) => [U, V(1)],
            (Letter::R, true) => [U, V(2)],
        };
        ModularWord(s.to_vec())
    }

    /// Word for a product of `L^{±1}`, `R^{±1}` letters (`true` = inverse).
    pub fn from_signed_letters(letters: impl IntoIterator<Item = (Letter, bool)>) -> Self {
        ModularWord::from_syllables(
            letters
                .into_iter()
                .flat_map(|(l, inv)| ModularWord::from_letter(l, inv).0),
        )
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: Syllable) {
        match self.0.last() {
            Some(&last) if last.same_kind(s) => {
                self.0.pop();
                if let Some(m) = last.merge(s) {
                    self.0.push(m);
                }
            }
            _ => self.0.push(s),
        }
    }

    pub fn mul(&self, other: &ModularWord) -> ModularWord {
        let mut w = self.clone();
        for &s in &other.0 {
            w.push(s);
        }
        w
    }

    pub fn inverse(&self) -> ModularWord {
        ModularWord(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// Matrix representative in `SL₂(ℤ)` (sign is not meaningful).
    pub fn to_matrix(&self) -> Mat2 {
        let u = Mat2::u();
        let v = Mat2::v();
        let v2 = &v * &v;
        self.0.iter().fold(Mat2::identity(), |acc, s| match s {
            Syllable::U => &acc * &u,
            Syllable::V(1) => &acc * &v,
            Syllable::V(_) => &acc * &v2,
        })
    }

    /// Cyclically reduced syllables of the conjugacy class.
    pub fn cyclic_reduction(&self) -> Vec<Syllable> {
        let mut s = self.0.clone();
        while s.len() > 1 && s[0].same_kind(s[s.len() - 1]) {
            let last = s.pop().expect("len > 1");
            match last.merge(s[0]) {
                Some(m) => s[0] = m,
                None => {
                    s.remove(0);
                }
            }
        }
        s
    }

    pub fn conjugacy_class(&self) -> ConjugacyClass {
        let mut s = self.cyclic_reduction();
        match s.len() {
            0 => return ConjugacyClass::Identity,
            1 => {
                let order = if s[0] == Syllable::U { 2 } else { 3 };
                return ConjugacyClass::Elliptic { order };
            }
            _ => {}
        }
        if s[0] != Syllable::U {
            s.rotate_left(1);
        }
        let letters: Vec<Letter> = s
            .chunks(2)
            .map(|pair| match pair[1] {
                Syllable::V(1) => Letter::R,
                _ => Letter::L,
            })
            .collect();
        let k = letters.len() as i64;
        if letters.iter().all(|&l| l == Letter::R) {
            // (UV)^k = L^{-k}
            ConjugacyClass::Parabolic { power: -k }
        } else if letters.iter().all(|&l| l == Letter::L) {
            // (UV²)^k = R^{-k}, conjugate to L^{k} via U.
            ConjugacyClass::Parabolic { power: k }
        } else {
            ConjugacyClass::Hyperbolic(LrWord::from_letters(letters).cyclic_normalize())
        }
    }
}

impl fmt::Display for ModularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for s in &self.0 {
            match s {
                Syllable::U => f.write_str("U")?,
                Syllable::V(1) => f.write_str("V")?,
                Syllable::V(_) => f.write_str("V2")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn relations_collapse() {
        use Syllable::*;
        assert!(ModularWord::from_syllables([U, U]).is_identity());
        assert!(ModularWord::from_syllables([V(1), V(2)]).is_identity());
        assert!(ModularWord::from_syllables([V(1), V(1), V(1)]).is_identity());
        assert_eq!(
            ModularWord::from_syllables([V(2), V(2)]).syllables(),
            &[V(1)]
        );
    }

    #[test]
    fn letters_match_matrices_up_to_sign() {
        for l in [Letter::L, Letter::R] {
            let m = ModularWord::from_letter(l, false).to_matrix();
            assert!(m.eq_psl(&l.matrix()), "{l:?}");
            let mi = ModularWord::from_letter(l, true).to_matrix();
            assert!(mi.eq_psl(&l.matrix().inverse()), "{l:?}⁻¹");
        }
    }

    #[test]
    fn classes_of_small_elements() {
        let l = ModularWord::from_letter(Letter::L, false);
        assert_eq!(l.conjugacy_class(), ConjugacyClass::Parabolic { power: 1 });
        let u = ModularWord::from_syllables([Syllable::U]);
        assert_eq!(u.conjugacy_class(), ConjugacyClass::Elliptic { order: 2 });
        let w = ModularWord::from_signed_letters([(Letter::L, false), (Letter::L, true)]);
        assert_eq!(w.conjugacy_class(), ConjugacyClass::Identity);
        let lr = ModularWord::from_signed_letters([(Letter::L, false), (Letter::R, false)]);
        assert_eq!(
            lr.conjugacy_class(),
            ConjugacyClass::Hyperbolic("LR".parse().unwrap())
        );
    }

    #[test]
    fn commutator_lands_on_trace_three_class() {
        // LR·(RL)⁻¹ has trace 3, the class of LR.
        let w = ModularWord::from_signed_letters([
            (Letter::L, false),
            (Letter::R, false),
            (Letter::L, true),
            (Letter::R, true),
        ]);
        assert_eq!(
            w.conjugacy_class(),
            ConjugacyClass::Hyperbolic("LR".parse().unwrap())
        );
    }

    proptest! {
        #[test]
        fn positive_words_are_their_own_class(bits in proptest::collection::vec(any::<bool>(), 2..24)) {
            prop_assume!(bits.iter().any(|&b| b) && bits.iter().any(|&b| !b));
            let letters: Vec<Letter> = bits.iter().map(|&b| if b { Letter::R } else { Letter::L }).collect();
            let w = LrWord::from_letters(letters.clone());
            let m = ModularWord::from_signed_letters(letters.iter().map(|&l| (l, false)));
            prop_assert_eq!(m.conjugacy_class(), ConjugacyClass::Hyperbolic(w.cyclic_normalize()));
        }

        #[test]
        fn inverse_cancels(bits in proptest::collection::vec((any::<bool>(), any::<bool>()), 0..20)) {
            let w = ModularWord::from_signed_letters(
                bits.iter().map(|&(r, inv)| (if r { Letter::R } else { Letter::L }, inv)));
            prop_assert!(w.mul(&w.inverse()).is_identity());
        }
    }
}
