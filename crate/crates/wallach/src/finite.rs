use stanley_core::{Cell, ClassicalPoset};

/// A small poset given by its full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    /// Labels for display; the order lives in `leq`.
    pub elements: Vec<(i64, i64)>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    pub fn new(elements: Vec<(i64, i64)>, leq: impl Fn((i64, i64), (i64, i64)) -> bool) -> Self {
        let rel = elements.iter().map(|&a| elements.iter().map(|&b| leq(a, b)).collect()).collect();
        FinitePoset { elements, leq: rel }
    }

    pub fn empty() -> Self {
        FinitePoset { elements: Vec::new(), leq: Vec::new() }
    }

    pub fn from_classical(poset: ClassicalPoset) -> Self {
        let cells: Vec<(i64, i64)> = poset.cells().into_iter().map(|(i, j)| (i as i64, j as i64)).collect();
        let as_cell = |(i, j): (i64, i64)| -> Cell { (i as usize, j as usize) };
        Self::new(cells, |a, b| poset.leq_unchecked(as_cell(a), as_cell(b)))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Cover pairs (a, b) with a < b and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.leq[a][b];
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.len()]; self.len()];
        for (a, b) in self.covers() {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }

    /// An order isomorphism onto `other`, if one exists.
    pub fn isomorphism(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        let sig = |p: &FinitePoset, a: usize| {
            let below = (0..p.len()).filter(|&b| p.leq[b][a]).count();
            let above = (0..p.len()).filter(|&b| p.leq[a][b]).count();
            (below, above)
        };
        search(self.len(), other.len(), |a| sig(self, a), |b| sig(other, b), |a, b, c, d| {
            self.leq[a][c] == other.leq[b][d] && self.leq[c][a] == other.leq[d][b]
        })
    }

    /// Whether the undirected Hasse diagrams are isomorphic graphs.
    pub fn same_covering_graph(&self, other: &FinitePoset) -> bool {
        let (x, y) = (self.adjacency(), other.adjacency());
        let deg = |adj: &Vec<Vec<bool>>, a: usize| adj[a].iter().filter(|&&e| e).count();
        search(self.len(), other.len(), |a| deg(&x, a), |b| deg(&y, b), |a, b, c, d| x[a][c] == y[b][d]).is_some()
    }
}

/// Backtracking bijection search with a cheap vertex signature.
fn search<S: PartialEq>(
    n: usize,
    m: usize,
    sig_a: impl Fn(usize) -> S,
    sig_b: impl Fn(usize) -> S,
    compatible: impl Fn(usize, usize, usize, usize) -> bool,
) -> Option<Vec<usize>> {
    if n != m {
        return None;
    }
    let sa: Vec<S> = (0..n).map(&sig_a).collect();
    let sb: Vec<S> = (0..m).map(&sig_b).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; m];
    fn rec<S: PartialEq>(
        a: usize,
        sa: &[S],
        sb: &[S],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        compatible: &dyn Fn(usize, usize, usize, usize) -> bool,
    ) -> bool {
        if a == sa.len() {
            return true;
        }
        for b in 0..sb.len() {
            if used[b] || sa[a] != sb[b] {
                continue;
            }
            if (0..a).all(|c| compatible(a, b, c, map[c])) {
                map[a] = b;
                used[b] = true;
                if rec(a + 1, sa, sb, map, used, compatible) {
                    return true;
                }
                used[b] = false;
            }
        }
        false
    }
    if rec(0, &sa, &sb, &mut map, &mut used, &compatible) {
        Some(map)
    } else {
        None
    }
}
