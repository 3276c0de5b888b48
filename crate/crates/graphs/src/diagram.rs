use serde::{Deserialize, Serialize};
use stanley_core::{Cell, ClassicalPoset, Column, Error, MatrixKind, Multiset, NatMatrix, Result};
use stanley_rsk::peel;

/// Vertex layout of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiagramKind {
    /// Vertices 1*..p* then 1..q; arcs join a starred vertex to an unstarred one.
    Bipartite { p: usize, q: usize },
    /// Vertices 1..n; loops and repeated arcs allowed.
    Loops { n: usize },
    /// Vertices 1..n; repeated arcs allowed, no loops.
    Simple { n: usize },
}

impl DiagramKind {
    pub fn poset(&self) -> ClassicalPoset {
        match *self {
            DiagramKind::Bipartite { p, q } => ClassicalPoset::Gl { p, q },
            DiagramKind::Loops { n } => ClassicalPoset::O { n },
            DiagramKind::Simple { n } => ClassicalPoset::Sp { n },
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            DiagramKind::Bipartite { p, q } => p + q,
            DiagramKind::Loops { n } | DiagramKind::Simple { n } => n,
        }
    }

    fn matrix_kind(&self) -> MatrixKind {
        match self {
            DiagramKind::Bipartite { .. } => MatrixKind::Generic,
            DiagramKind::Loops { .. } => MatrixKind::UpperTriangular,
            DiagramKind::Simple { .. } => MatrixKind::StrictlyUpperTriangular,
        }
    }

    fn size(&self) -> (usize, usize) {
        match *self {
            DiagramKind::Bipartite { p, q } => (p, q),
            DiagramKind::Loops { n } | DiagramKind::Simple { n } => (n, n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperedgeSide {
    Starred,
    Unstarred,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDiagram {
    pub kind: DiagramKind,
    /// Arcs as (i, j); for one-sided kinds i <= j.
    pub arcs: Vec<Cell>,
    /// Bottom to top, each at most the next.
    pub hyperedges: Vec<Column>,
    pub side: Option<HyperedgeSide>,
    pub painted: Option<Column>,
}

impl ArcDiagram {
    pub fn new(kind: DiagramKind, arcs: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let poset = kind.poset();
        let mut out = Vec::new();
        for (a, b) in arcs {
            let arc = match kind {
                DiagramKind::Bipartite { .. } => (a, b),
                _ => (a.min(b), a.max(b)),
            };
            if !poset.contains(arc) {
                return Err(Error::domain(format!("arc {arc:?} not allowed in {kind:?}")));
            }
            out.push(arc);
        }
        out.sort_unstable();
        Ok(ArcDiagram { kind, arcs: out, hyperedges: Vec::new(), side: None, painted: None })
    }

    /// Adds hyperedges on one side of a bipartite diagram; they must form a chain.
    pub fn with_hyperedges(mut self, side: HyperedgeSide, mut edges: Vec<Column>) -> Result<Self> {
        let DiagramKind::Bipartite { p, q } = self.kind else {
            return Err(Error::domain("hyperedges need a bipartite diagram"));
        };
        let limit = if side == HyperedgeSide::Starred { p } else { q };
        let k = edges.first().map_or(0, Column::len);
        if edges.iter().any(|e| e.len() != k || e.is_empty() || e.max_entry() > limit) {
            return Err(Error::domain("hyperedges must share one size and fit their side"));
        }
        edges.sort();
        if edges.windows(2).any(|w| !w[0].leq(&w[1])) {
            return Err(Error::domain("hyperedges are not pairwise comparable"));
        }
        self.hyperedges = edges;
        self.side = Some(side);
        Ok(self)
    }

    pub fn with_painting(mut self, painted: Column) -> Result<Self> {
        let DiagramKind::Loops { n } = self.kind else {
            return Err(Error::domain("painting needs a diagram with loops allowed"));
        };
        if painted.is_empty() || painted.max_entry() > n {
            return Err(Error::domain(format!("painted set {painted} does not fit {n} vertices")));
        }
        self.painted = Some(painted);
        Ok(self)
    }

    pub fn matrix(&self) -> NatMatrix {
        let (r, c) = self.kind.size();
        let mut m = NatMatrix::zeros(r, c, self.kind.matrix_kind());
        for &(i, j) in &self.arcs {
            m.add(i, j, 1);
        }
        m
    }

    /// Arcs count 2, each hyperedge (or the painted set) counts its size.
    pub fn degree(&self) -> usize {
        2 * self.arcs.len()
            + self.hyperedges.iter().map(Column::len).sum::<usize>()
            + self.painted.as_ref().map_or(0, Column::len)
    }
}

/// Largest strict nesting (GL, Sp) or fewest weak nestings covering the arcs (O).
pub fn diagram_width(d: &ArcDiagram) -> usize {
    d.kind.poset().width(&d.matrix().support())
}

/// Each entry of `top` must not exceed the smallest row (or column) of the
/// matching chain; missing chains impose nothing.
pub(crate) fn top_fits(top: &[usize], chains: &[Multiset], by_row: bool) -> bool {
    top.iter().zip(chains).all(|(&x, chain)| {
        let least = chain.keys().map(|&(i, j)| if by_row { i } else { j }).min().expect("chains are nonempty");
        x <= least
    })
}

/// Whether the topmost hyperedge respects the chains of the arcs.
pub fn validate_sl_hyperedges(d: &ArcDiagram) -> bool {
    let (Some(top), Some(side)) = (d.hyperedges.last(), d.side) else {
        return true;
    };
    let Ok(dec) = peel(&d.matrix(), d.kind.poset()) else {
        return false;
    };
    match side {
        HyperedgeSide::Starred => top_fits(top.entries(), &dec.chains_star, true),
        HyperedgeSide::Unstarred => top_fits(top.entries(), &dec.chains, false),
    }
}

/// Whether the painted vertices sit weakly left of the matching weak nestings.
pub fn validate_so_painting(d: &ArcDiagram) -> bool {
    let Some(painted) = &d.painted else {
        return true;
    };
    let Ok(dec) = peel(&d.matrix(), d.kind.poset()) else {
        return false;
    };
    top_fits(painted.entries(), &dec.chains, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_diagram() {
        let d = ArcDiagram::new(DiagramKind::Loops { n: 3 }, []).unwrap();
        assert_eq!(diagram_width(&d), 0);
        assert!(validate_so_painting(&d));
        assert!(validate_sl_hyperedges(&d));
    }

    #[test]
    fn arcs_are_normalised() {
        let d = ArcDiagram::new(DiagramKind::Simple { n: 4 }, [(3, 1)]).unwrap();
        assert_eq!(d.arcs, vec![(1, 3)]);
        assert!(ArcDiagram::new(DiagramKind::Simple { n: 4 }, [(2, 2)]).is_err());
    }
}
