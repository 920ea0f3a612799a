/// Variable names indexed by position. Unnamed positions print as `x{i+1}`,
/// so the default table reads `x1, x2, x3, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    /// Table pre-populated with `x1..x{n}`.
    pub fn standard(n: usize) -> Self {
        Self {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn name(&self, i: usize) -> String {
        self.names
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("x{}", i + 1))
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Index of `name`, appending it if unknown. A bare `x{k}` that is not
    /// in the table maps to position `k-1` when that slot is free.
    pub fn intern(&mut self, name: &str) -> usize {
        if let Some(i) = self.index_of(name) {
            return i;
        }
        if let Some(k) = name.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
            if k >= 1 && k > self.names.len() {
                while self.names.len() < k - 1 {
                    let next = format!("x{}", self.names.len() + 1);
                    self.names.push(next);
                }
                self.names.push(name.to_string());
                return k - 1;
            }
        }
        self.names.push(name.to_string());
        self.names.len() - 1
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}
