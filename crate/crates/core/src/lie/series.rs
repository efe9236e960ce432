use super::{bracket_of_subspaces, require_valid, LieAlgebra};
use crate::linalg::Subspace;
use crate::Result;

/// Lower central and derived series of a Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    /// `g^1 ⊋ g^2 ⊋ … ⊋ g^m` where `g^m` is the first term with
    /// `g^{m+1} = g^m`.
    pub lower_central: Vec<Subspace>,
    pub g_infinity: Subspace,
    /// `g^(0) = g ⊋ g^(1) = [g,g] ⊋ …` up to the first repeated term.
    pub derived: Vec<Subspace>,
    pub nilpotent: bool,
    /// Smallest `k` with `g^(k) = 0`; `None` if not solvable.
    pub solvable_class: Option<usize>,
}

impl SeriesReport {
    /// `g^i` for `i >= 1`, constant past stabilization.
    pub fn lower_central_term(&self, i: usize) -> &Subspace {
        assert!(i >= 1, "lower central series starts at g^1");
        let idx = (i - 1).min(self.lower_central.len() - 1);
        &self.lower_central[idx]
    }

    /// Smallest `i` with `g^i = g^inf`.
    pub fn infinity_index(&self) -> usize {
        self.lower_central.len()
    }
}

/// Both series, each stopped at its first repeated term.
pub fn series(g: &LieAlgebra) -> Result<SeriesReport> {
    require_valid(g)?;
    let whole = Subspace::full(g.dim());

    let mut lower_central = vec![whole.clone()];
    loop {
        let last = lower_central.last().expect("nonempty");
        let next = bracket_of_subspaces(g, &whole, last)?;
        if &next == last {
            break;
        }
        lower_central.push(next);
    }

    let mut derived = vec![whole];
    loop {
        let last = derived.last().expect("nonempty");
        let next = bracket_of_subspaces(g, last, last)?;
        if &next == last {
            break;
        }
        derived.push(next);
    }

    let g_infinity = lower_central.last().cloned().expect("nonempty");
    let last_derived = derived.last().expect("nonempty");
    let solvable_class = last_derived.is_zero().then(|| derived.len() - 1);
    Ok(SeriesReport {
        nilpotent: g_infinity.is_zero(),
        g_infinity,
        lower_central,
        derived,
        solvable_class,
    })
}

/// `[[g,g],[g,g]] = 0`
pub fn is_two_step_solvable(g: &LieAlgebra) -> Result<bool> {
    let whole = Subspace::full(g.dim());
    let d = bracket_of_subspaces(g, &whole, &whole)?;
    Ok(bracket_of_subspaces(g, &d, &d)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::unit_vector;
    use crate::Error;

    #[test]
    fn heisenberg_series() {
        let s = series(&catalog::heisenberg()).unwrap();
        assert_eq!(s.lower_central_term(2).basis(), &[unit_vector(3, 2)]);
        assert!(s.lower_central_term(3).is_zero());
        assert!(s.nilpotent);
        assert_eq!(s.solvable_class, Some(2));
        assert_eq!(s.infinity_index(), 3);
    }

    #[test]
    fn r2_series() {
        let s = series(&catalog::r2()).unwrap();
        let y = Subspace::span(2, [unit_vector(2, 1)]).unwrap();
        assert_eq!(s.lower_central_term(2), &y);
        assert_eq!(s.lower_central_term(3), &y);
        assert_eq!(s.g_infinity, y);
        assert!(!s.nilpotent);
        assert_eq!(s.solvable_class, Some(2));
        assert_eq!(s.infinity_index(), 2);
    }

    #[test]
    fn abelian_series() {
        let s = series(&LieAlgebra::abelian(3)).unwrap();
        assert!(s.lower_central_term(2).is_zero());
        assert_eq!(s.solvable_class, Some(1));
        assert_eq!(
            series(&LieAlgebra::abelian(0)).unwrap().solvable_class,
            Some(0)
        );
    }

    #[test]
    fn sl2_not_solvable() {
        let s = series(&catalog::sl2()).unwrap();
        assert_eq!(s.solvable_class, None);
        assert!(s.g_infinity.is_full());
        assert!(!is_two_step_solvable(&catalog::sl2()).unwrap());
    }

    #[test]
    fn two_step_solvability() {
        assert!(is_two_step_solvable(&catalog::heisenberg()).unwrap());
        assert!(is_two_step_solvable(&LieAlgebra::abelian(4)).unwrap());
        assert!(is_two_step_solvable(&catalog::filiform(6).unwrap()).unwrap());
    }

    #[test]
    fn invalid_algebra_rejected() {
        let mut t = crate::Table::zero(2);
        t.set(0, 1, unit_vector(2, 0));
        assert!(matches!(
            series(&LieAlgebra::new(t)),
            Err(Error::InvalidLieAlgebra(_))
        ));
    }
}
