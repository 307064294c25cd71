//! 3CNF satisfiability and the two-quantifier QSAT2 fragment, both decided
//! by enumeration. QSAT2 formulas have the shape "exists x-block such that
//! no y-block assignment satisfies the matrix", with equal block sizes.

use crate::{Error, Limits, Result};

/// Literal over variables `0..num_vars`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lit {
    pub var: usize,
    pub negated: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, negated: true }
    }

    fn satisfied(&self, assignment: u64) -> bool {
        let value = assignment >> self.var & 1 == 1;
        value != self.negated
    }
}

/// 3CNF formula: every clause has exactly three (not necessarily distinct)
/// literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Lit; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Lit; 3]>) -> Result<Self> {
        for clause in &clauses {
            for lit in clause {
                if lit.var >= num_vars {
                    return Err(Error::invalid(format!(
                        "literal over variable {} but formula has {num_vars}",
                        lit.var
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn eval(&self, assignment: u64) -> bool {
        self.clauses
            .iter()
            .all(|cl| cl.iter().any(|l| l.satisfied(assignment)))
    }
}

/// Satisfiability by enumeration; returns a witness assignment as a bitmask.
pub fn sat3_decide(f: &CnfFormula, limits: &Limits) -> Result<Option<u64>> {
    if f.num_vars > limits.sat_vars {
        return Err(Error::limit(format!(
            "3SAT enumeration over {} variables exceeds the cap of {}",
            f.num_vars, limits.sat_vars
        )));
    }
    Ok((0..1u64 << f.num_vars).find(|&a| f.eval(a)))
}

/// Which quantifier block a QSAT2 variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarBlock {
    X,
    Y,
}

/// Literal over the x- or y-block of a QSAT2 formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QLit {
    pub block: VarBlock,
    pub index: usize,
    pub negated: bool,
}

impl QLit {
    pub fn x(index: usize) -> Self {
        QLit {
            block: VarBlock::X,
            index,
            negated: false,
        }
    }

    pub fn nx(index: usize) -> Self {
        QLit {
            block: VarBlock::X,
            index,
            negated: true,
        }
    }

    pub fn y(index: usize) -> Self {
        QLit {
            block: VarBlock::Y,
            index,
            negated: false,
        }
    }

    pub fn ny(index: usize) -> Self {
        QLit {
            block: VarBlock::Y,
            index,
            negated: true,
        }
    }

    pub fn is_y(&self) -> bool {
        self.block == VarBlock::Y
    }
}

/// A formula "exists x_1..x_n, not exists y_1..y_n, phi", with phi in 3CNF
/// over the two equally sized blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qbf2Formula {
    /// Variables per block.
    pub block_size: usize,
    pub clauses: Vec<[QLit; 3]>,
}

impl Qbf2Formula {
    pub fn new(block_size: usize, clauses: Vec<[QLit; 3]>) -> Result<Self> {
        for clause in &clauses {
            for lit in clause {
                if lit.index >= block_size {
                    return Err(Error::invalid(format!(
                        "literal index {} outside block of size {block_size}",
                        lit.index
                    )));
                }
            }
        }
        Ok(Qbf2Formula {
            block_size,
            clauses,
        })
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Number of y-literal occurrences across all clauses (m-hat).
    pub fn y_occurrences(&self) -> usize {
        self.clauses
            .iter()
            .flatten()
            .filter(|l| l.is_y())
            .count()
    }

    /// The matrix phi as a plain CNF over `2n` variables: x_i maps to
    /// variable i, y_i to variable n+i.
    pub fn matrix(&self) -> CnfFormula {
        let n = self.block_size;
        let clauses = self
            .clauses
            .iter()
            .map(|cl| {
                cl.map(|l| Lit {
                    var: match l.block {
                        VarBlock::X => l.index,
                        VarBlock::Y => n + l.index,
                    },
                    negated: l.negated,
                })
            })
            .collect();
        CnfFormula {
            num_vars: 2 * n,
            clauses,
        }
    }

    fn eval(&self, x: u64, y: u64) -> bool {
        self.clauses.iter().all(|cl| {
            cl.iter().any(|l| {
                let value = match l.block {
                    VarBlock::X => x >> l.index & 1 == 1,
                    VarBlock::Y => y >> l.index & 1 == 1,
                };
                value != l.negated
            })
        })
    }

    /// Pads both blocks with fresh variables (appearing in no clause) up to
    /// `target` per block. Preserves the QSAT2 decision: assignments to the
    /// fresh variables never touch the matrix.
    pub fn padded(&self, target: usize) -> Result<Qbf2Formula> {
        if target < self.block_size {
            return Err(Error::invalid(format!(
                "cannot pad block of size {} down to {target}",
                self.block_size
            )));
        }
        Ok(Qbf2Formula {
            block_size: target,
            clauses: self.clauses.clone(),
        })
    }
}

/// Decides "exists x, not exists y, phi(x, y)"; returns a witness x-block
/// assignment when true.
pub fn qsat2_decide(f: &Qbf2Formula, limits: &Limits) -> Result<Option<u64>> {
    let n = f.block_size;
    if n > limits.qsat2_block_vars {
        return Err(Error::limit(format!(
            "QSAT2 enumeration over blocks of {n} exceeds the cap of {}",
            limits.qsat2_block_vars
        )));
    }
    'outer: for x in 0..1u64 << n {
        for y in 0..1u64 << n {
            if f.eval(x, y) {
                continue 'outer;
            }
        }
        return Ok(Some(x));
    }
    Ok(None)
}
