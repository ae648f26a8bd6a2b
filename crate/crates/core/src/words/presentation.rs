use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::fox::fox_derivative;
use super::group_ring::GroupRingElem;
use super::parse::parse_word;
use super::word::FreeWord;
use crate::algebra::NVARS;
use crate::error::{Error, Result};

/// Group presentation `⟨x₁,…,x_ℓ | r₁,…⟩` together with the abelianization
/// `x_j ↦ s_{σ(j)}` onto the meridian of each link component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relators: Vec<FreeWord>,
    abelianization: Vec<usize>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>, abelianization: Vec<usize>) -> Result<Self> {
        if abelianization.len() != generators {
            return Err(Error::Domain(format!(
                "abelianization has {} entries for {generators} generators",
                abelianization.len()
            )));
        }
        if let Some(bad) = abelianization.iter().find(|&&c| c == 0 || c > NVARS) {
            return Err(Error::Domain(format!("meridian index {bad} outside 1..={NVARS}")));
        }
        if let Some(r) = relators.iter().find(|r| r.max_gen() > generators) {
            return Err(Error::Domain(format!("relator {r} uses a generator beyond x{generators}")));
        }
        Ok(Self { generators, relators, abelianization })
    }

    /// `⟨x₁,x₂,x₃ | [x₂,[x₃,x̄₁]], [x₃,[x₁,x̄₂]]⟩`, each `x_j` a meridian of component `j`.
    pub fn borromean() -> Self {
        let rels = ["[x2,[x3,X1]]", "[x3,[x1,X2]]"].map(|s| parse_word(s).expect("valid relator"));
        Self::new(3, rels.to_vec(), vec![1, 2, 3]).expect("valid presentation")
    }

    /// The six-generator Wirtinger presentation; `x₄, x₅, x₆` stand for the
    /// arcs `y₁, y₂, y₃`, which are meridians of components 1, 2, 3.
    pub fn borromean_wirtinger() -> Self {
        let rels = ["X4 x3 x1 X3", "X5 x1 x2 X1", "X6 x2 x3 X2", "X3 X5 x6 x5", "X2 X4 x5 x4"]
            .map(|s| parse_word(s).expect("valid relator"));
        Self::new(6, rels.to_vec(), vec![1, 2, 3, 1, 2, 3]).expect("valid presentation")
    }

    /// The Wirtinger relation dropped from [`borromean_wirtinger`](Self::borromean_wirtinger).
    pub fn borromean_wirtinger_omitted() -> FreeWord {
        parse_word("X1 X6 x4 x6").expect("valid relator")
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// `σ(j)` for `j = 1..=ℓ`, 1-based component indices.
    pub fn abelianization(&self) -> &[usize] {
        &self.abelianization
    }

    /// `(#relators) × ℓ` matrix of Fox derivatives `∂rᵢ/∂x_j`.
    pub fn jacobian(&self) -> Jacobian {
        let rows = self
            .relators
            .iter()
            .map(|r| (1..=self.generators).map(|j| fox_derivative(r, j)).collect())
            .collect();
        Jacobian { rows }
    }
}

/// Fox Jacobian of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jacobian {
    pub rows: Vec<Vec<GroupRingElem>>,
}

impl Jacobian {
    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn entry(&self, i: usize, j: usize) -> &GroupRingElem {
        &self.rows[i - 1][j - 1]
    }

    /// `M_v`: the Jacobian with column `v` (1-based) removed.
    pub fn delete_column(&self, v: usize) -> Result<Vec<Vec<GroupRingElem>>> {
        let n = self.columns();
        if v == 0 || v > n {
            return Err(Error::Index { index: v, max: n });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| j + 1 != v).map(|(_, e)| e.clone()).collect())
            .collect())
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    generators: usize,
    relators: Vec<String>,
    abelianization: Vec<usize>,
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PresentationRepr {
            generators: self.generators,
            relators: self.relators.iter().map(|r| r.to_string()).collect(),
            abelianization: self.abelianization.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PresentationRepr::deserialize(deserializer)?;
        let relators = repr
            .relators
            .iter()
            .map(|s| parse_word(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Presentation::new(repr.generators, relators, repr.abelianization).map_err(D::Error::custom)
    }
}
