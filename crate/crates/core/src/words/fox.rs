use super::group_ring::GroupRingElem;
use super::word::FreeWord;

/// Fox derivative `∂w/∂x_j` in `ℤ[F]`.
///
/// Uses `∂(u x_j)/∂x_j = ∂u/∂x_j + u` and `∂(u x̄_j)/∂x_j = ∂u/∂x_j − u x̄_j`,
/// accumulating the prefix of `w` letter by letter.
pub fn fox_derivative(w: &FreeWord, j: usize) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix = FreeWord::empty();
    for &l in w.letters() {
        if l.gen == j {
            if l.inverse {
                let mut p = prefix.clone();
                p.push(l);
                out.add_term(-1, p);
            } else {
                out.add_term(1, prefix.clone());
            }
        }
        prefix.push(l);
    }
    out
}

/// Fox derivative extended linearly to group-ring elements:
/// `∂(Σ c w)/∂x_j = Σ c ∂w/∂x_j`.
pub fn fox_derivative_elem(e: &GroupRingElem, j: usize) -> GroupRingElem {
    e.terms().fold(GroupRingElem::zero(), |acc, (w, c)| {
        let d = fox_derivative(w, j);
        &acc + &GroupRingElem::from_terms(d.terms().map(|(u, k)| (k * c, u.clone())))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(s: &str) -> FreeWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn axioms() {
        assert_eq!(fox_derivative(&w("x1"), 1), GroupRingElem::one());
        assert!(fox_derivative(&w("x2"), 1).is_zero());
        assert_eq!(fox_derivative(&w("x1 x2"), 2), GroupRingElem::from_word(w("x1")));
        assert_eq!(fox_derivative(&w("X1"), 1), GroupRingElem::term(-1, w("X1")));
        assert!(fox_derivative(&FreeWord::empty(), 1).is_zero());
    }

    #[test]
    fn commutator_toy() {
        // ∂(x1 x2 X1 X2)/∂x1 = 1 − x1 x2 X1
        let d = fox_derivative(&w("[x1,x2]"), 1);
        let expect = &GroupRingElem::one() - &GroupRingElem::from_word(w("x1 x2 X1"));
        assert_eq!(d, expect);
    }

    #[test]
    fn product_rule_in_the_free_group() {
        let (u, v) = (w("x1 X3 x2 x2"), w("X2 x1 x3"));
        for j in 1..=3 {
            let lhs = fox_derivative(&(&u * &v), j);
            let rhs = &fox_derivative(&u, j) + &fox_derivative(&v, j).left_mul(&u);
            assert_eq!(lhs, rhs, "j = {j}");
        }
    }

    #[test]
    fn fundamental_formula_augmentation() {
        // ε(∂w/∂x_j) is the exponent sum of x_j in w
        let r = w("[x2,[x3,X1]] x1 x1 X3");
        let sums = r.exponent_sums(3);
        for j in 1..=3 {
            assert_eq!(fox_derivative(&r, j).augmentation(), sums[j - 1] as i64);
        }
    }
}
