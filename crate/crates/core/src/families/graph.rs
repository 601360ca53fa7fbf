use super::{parse_lines, FamilyError};

/// A multigraph on vertices `1..=n` whose degrees are all 1 or 3. Edge `e`
/// (0-based in `edges`) is coordinate `x_{e+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl CubicGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, FamilyError> {
        if edges.is_empty() {
            return Err(FamilyError::Invalid("the graph has no edges".into()));
        }
        let mut degree = vec![0usize; vertices];
        for &(u, v) in &edges {
            if u == 0 || v == 0 || u > vertices || v > vertices {
                return Err(FamilyError::Invalid(format!(
                    "edge {u}-{v} uses a vertex outside 1..{vertices}"
                )));
            }
            if u == v {
                return Err(FamilyError::Invalid(format!("loop at vertex {u}")));
            }
            degree[u - 1] += 1;
            degree[v - 1] += 1;
        }
        if let Some(v) = degree.iter().position(|&d| d != 1 && d != 3) {
            return Err(FamilyError::Invalid(format!(
                "vertex {} has degree {}; every vertex must have degree 1 or 3",
                v + 1,
                degree[v]
            )));
        }
        Ok(Self { vertices, edges })
    }

    /// The complete graph on four vertices, edges in lexicographic order.
    pub fn k4() -> Self {
        Self::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).expect("K4 is cubic")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// For each degree-3 vertex in order, its three incident edge indices
    /// (0-based, ascending).
    pub fn cubic_stars(&self) -> Vec<[usize; 3]> {
        (1..=self.vertices)
            .filter_map(|v| {
                let incident: Vec<usize> = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a == v || b == v)
                    .map(|(e, _)| e)
                    .collect();
                <[usize; 3]>::try_from(incident).ok()
            })
            .collect()
    }

    /// Parses `vertices=<k>` followed by lines `u-v`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let mut lines = parse_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| FamilyError::Parse {
            line: 1,
            message: "missing `vertices=<k>` header".into(),
        })?;
        let n = header
            .strip_prefix("vertices=")
            .and_then(|k| k.trim().parse::<usize>().ok())
            .ok_or_else(|| FamilyError::Parse {
                line: line_no,
                message: format!("expected `vertices=<k>`, found `{header}`"),
            })?;
        let mut edges = Vec::new();
        for (line_no, line) in lines {
            let parsed = line.split_once('-').and_then(|(a, b)| {
                Some((
                    a.trim().parse::<usize>().ok()?,
                    b.trim().parse::<usize>().ok()?,
                ))
            });
            edges.push(parsed.ok_or_else(|| FamilyError::Parse {
                line: line_no,
                message: format!("expected `u-v`, found `{line}`"),
            })?);
        }
        Self::new(n, edges)
    }
}
