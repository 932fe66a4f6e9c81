//! Trace rings: the polynomial rings carrying Fricke coordinates.
//!
//! For a rank-`n` free group the ring has one variable per generator trace
//! `t_a`, per ordered pair trace `t_ab` (indices ascending), and per ordered
//! triple trace `t_abc` (indices ascending). Auxiliary variables used by
//! elimination steps may be prepended (so they dominate block orders) or
//! appended.

use std::collections::HashMap;
use std::sync::Arc;

/// One ring variable: a basic trace coordinate or an auxiliary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TraceVar {
    Single(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
    Aux(String),
}

#[derive(Debug)]
pub struct TraceRing {
    gen_names: Vec<String>,
    front_aux: Vec<String>,
    back_aux: Vec<String>,
    vars: Vec<TraceVar>,
    names: Vec<String>,
    index: HashMap<TraceVar, usize>,
}

impl PartialEq for TraceRing {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}
impl Eq for TraceRing {}

impl TraceRing {
    /// Ring for the free group on the named generators.
    pub fn new(gen_names: Vec<String>) -> Arc<Self> {
        Self::assemble(gen_names, Vec::new(), Vec::new())
    }

    /// Ring for a rank-`n` free group with default generator names
    /// `a, b, c, ...`.
    pub fn for_rank(n: usize) -> Arc<Self> {
        Self::new(default_names(n))
    }

    fn assemble(
        gen_names: Vec<String>,
        front_aux: Vec<String>,
        back_aux: Vec<String>,
    ) -> Arc<Self> {
        let n = gen_names.len();
        let mut vars = Vec::new();
        for name in &front_aux {
            vars.push(TraceVar::Aux(name.clone()));
        }
        for i in 0..n {
            vars.push(TraceVar::Single(i));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                vars.push(TraceVar::Pair(i, j));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    vars.push(TraceVar::Triple(i, j, k));
                }
            }
        }
        for name in &back_aux {
            vars.push(TraceVar::Aux(name.clone()));
        }
        let names: Vec<String> = vars
            .iter()
            .map(|v| match v {
                TraceVar::Single(i) => format!("t_{}", gen_names[*i]),
                TraceVar::Pair(i, j) => format!("t_{}{}", gen_names[*i], gen_names[*j]),
                TraceVar::Triple(i, j, k) => {
                    format!("t_{}{}{}", gen_names[*i], gen_names[*j], gen_names[*k])
                }
                TraceVar::Aux(name) => name.clone(),
            })
            .collect();
        for (i, a) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(a),
                "generator names produce a duplicate ring variable `{}`",
                a
            );
        }
        let index = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        Arc::new(TraceRing { gen_names, front_aux, back_aux, vars, names, index })
    }

    pub fn arity(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[TraceVar] {
        &self.vars
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn var_index(&self, v: &TraceVar) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn single(&self, i: usize) -> usize {
        self.index[&TraceVar::Single(i)]
    }

    /// Index of the pair variable; arguments in either order.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        assert_ne!(i, j, "pair trace variable needs distinct generators");
        self.index[&TraceVar::Pair(i.min(j), i.max(j))]
    }

    /// Index of the triple variable with ascending indices.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> usize {
        let mut s = [i, j, k];
        s.sort_unstable();
        assert!(s[0] < s[1] && s[1] < s[2], "triple trace variable needs distinct generators");
        self.index[&TraceVar::Triple(s[0], s[1], s[2])]
    }

    pub fn num_front_aux(&self) -> usize {
        self.front_aux.len()
    }

    /// Extends the ring with a fresh auxiliary variable in front (position
    /// 0), where elimination orders rank it highest. Returns the extended
    /// ring; the new variable has index 0.
    pub fn with_aux_prepended(self: &Arc<Self>, base: &str) -> Arc<Self> {
        let name = self.fresh_aux_name(base);
        let mut front = self.front_aux.clone();
        front.insert(0, name);
        Self::assemble(self.gen_names.clone(), front, self.back_aux.clone())
    }

    /// Extends the ring with a fresh auxiliary variable at the end. Returns
    /// the extended ring; the new variable has the last index.
    pub fn with_aux_appended(self: &Arc<Self>, base: &str) -> Arc<Self> {
        let name = self.fresh_aux_name(base);
        let mut back = self.back_aux.clone();
        back.push(name);
        Self::assemble(self.gen_names.clone(), self.front_aux.clone(), back)
    }

    /// The ring with the frontmost auxiliary removed.
    pub fn without_front_aux(self: &Arc<Self>) -> Arc<Self> {
        assert!(!self.front_aux.is_empty(), "no front auxiliary to remove");
        Self::assemble(
            self.gen_names.clone(),
            self.front_aux[1..].to_vec(),
            self.back_aux.clone(),
        )
    }

    fn fresh_aux_name(&self, base: &str) -> String {
        if !self.names.iter().any(|n| n == base) {
            return base.to_string();
        }
        let mut k = 0usize;
        loop {
            let cand = format!("{}{}", base, k);
            if !self.names.iter().any(|n| *n == cand) {
                return cand;
            }
            k += 1;
        }
    }

    /// Ring with identical variable structure but new generator names.
    pub fn renamed(self: &Arc<Self>, gen_names: Vec<String>) -> Arc<Self> {
        assert_eq!(gen_names.len(), self.gen_names.len());
        Self::assemble(gen_names, self.front_aux.clone(), self.back_aux.clone())
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}
