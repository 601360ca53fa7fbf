use super::{parse_lines, FamilyError};

/// A strict partial order on `1..=n`, stored by its transitive closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `less[i][j]` iff `i+1 ≺ j+1`.
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the order generated by `relations` (1-based pairs `i ≺ j`).
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self, FamilyError> {
        if n == 0 {
            return Err(FamilyError::Invalid(
                "a poset needs at least one element".into(),
            ));
        }
        let mut less = vec![vec![false; n]; n];
        for &(i, j) in relations {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(FamilyError::Invalid(format!(
                    "relation {i}<{j} uses an element outside 1..{n}"
                )));
            }
            less[i - 1][j - 1] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i][i]) {
            return Err(FamilyError::Invalid(format!(
                "the relations contain a cycle through element {}",
                i + 1
            )));
        }
        Ok(Self { n, less })
    }

    pub fn chain(n: usize) -> Self {
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &rel).expect("a chain is a valid order")
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(n, &[]).expect("the empty order is valid")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i ≺ j`, 1-based.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i - 1][j - 1]
    }

    /// Cover relations `i ⋖ j` in lexicographic order, 1-based.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.less[i][j] && !(0..n).any(|k| self.less[i][k] && self.less[k][j]) {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// All maximal chains, each listed bottom-up, in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let covers = self.covers();
        let minimal = (1..=self.n).filter(|&j| !(1..=self.n).any(|i| self.less(i, j)));
        let mut out = Vec::new();
        for start in minimal {
            let mut stack = vec![vec![start]];
            let mut found = Vec::new();
            while let Some(path) = stack.pop() {
                let last = *path.last().expect("paths are nonempty");
                let next: Vec<usize> = covers
                    .iter()
                    .filter(|&&(i, _)| i == last)
                    .map(|&(_, j)| j)
                    .collect();
                if next.is_empty() {
                    found.push(path);
                    continue;
                }
                for j in next.into_iter().rev() {
                    let mut longer = path.clone();
                    longer.push(j);
                    stack.push(longer);
                }
            }
            out.extend(found);
        }
        out
    }

    /// Every strict partial order on `1..=n`, labeled.
    pub fn enumerate(n: usize) -> Vec<Self> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        assert!(
            pairs.len() < 32,
            "labeled enumeration is limited to small n"
        );
        let mut out = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let rel: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            // keep only relation sets that are already transitively closed
            if let Ok(p) = Self::new(n, &rel) {
                let closed = pairs.iter().filter(|&&(i, j)| p.less(i, j)).count();
                if closed == rel.len() {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Parses `n=<k>` followed by lines `i<j`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let mut lines = parse_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| FamilyError::Parse {
            line: 1,
            message: "missing `n=<k>` header".into(),
        })?;
        let n = header
            .strip_prefix("n=")
            .and_then(|k| k.trim().parse::<usize>().ok())
            .ok_or_else(|| FamilyError::Parse {
                line: line_no,
                message: format!("expected `n=<k>`, found `{header}`"),
            })?;
        let mut rel = Vec::new();
        for (line_no, line) in lines {
            let parsed = line.split_once('<').and_then(|(a, b)| {
                Some((
                    a.trim().parse::<usize>().ok()?,
                    b.trim().parse::<usize>().ok()?,
                ))
            });
            match parsed {
                Some(pair) => rel.push(pair),
                None => {
                    return Err(FamilyError::Parse {
                        line: line_no,
                        message: format!("expected `i<j`, found `{line}`"),
                    })
                }
            }
        }
        Self::new(n, &rel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_examples() {
        assert_eq!(Poset::chain(3).maximal_chains(), vec![vec![1, 2, 3]]);
        assert_eq!(Poset::antichain(2).maximal_chains(), vec![vec![1], vec![2]]);
        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(v.maximal_chains(), vec![vec![1, 3], vec![2, 3]]);
        let diamond = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(diamond.maximal_chains(), vec![vec![1, 2, 4], vec![1, 3, 4]]);
    }

    #[test]
    fn covers_drop_transitive_pairs() {
        let p = Poset::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(p.covers(), vec![(1, 2), (2, 3)]);
        assert!(p.less(1, 3));
    }

    #[test]
    fn parsing() {
        let p = Poset::parse("n=2\n1<2\n").unwrap();
        assert_eq!(p, Poset::chain(2));
        let p = Poset::parse("# a comment\nn=3\n\n1 < 3  # trailing\n2<3").unwrap();
        assert_eq!(p.covers(), vec![(1, 3), (2, 3)]);
        assert!(
            matches!(Poset::parse("n=2\n1<2\n2<1"), Err(FamilyError::Invalid(m)) if m.contains("cycle"))
        );
        assert!(matches!(
            Poset::parse("n=2\n1<3"),
            Err(FamilyError::Invalid(_))
        ));
        assert!(matches!(
            Poset::parse("n=2\n1-2"),
            Err(FamilyError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Poset::parse("m=2"),
            Err(FamilyError::Parse { line: 1, .. })
        ));
        assert!(matches!(Poset::parse(""), Err(FamilyError::Parse { .. })));
    }

    #[test]
    fn labeled_poset_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| Poset::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
    }
}
