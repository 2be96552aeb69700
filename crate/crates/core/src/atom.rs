//! Five-level atom pair: basis indexing, Hamiltonian and decay channels.
//!
//! Each atom carries the qubit states |0⟩ and |1⟩, an uncoupled reservoir
//! state |D⟩ populated only by spontaneous decay, the intermediate excited
//! state |p⟩ and the Rydberg state |r⟩. The two-atom space is the 25-dim
//! tensor product, ordered control-atom major: index = 5·ord(a) + ord(b).

use crate::error::{Error, Result};
use crate::linalg::C64;
use crate::units::FreqConvention;
use ndarray::Array2;
use serde::{Deserialize, Serialize};

/// Single-atom level, with fixed ordinals 0..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AtomLevel {
    Q0 = 0,
    Q1 = 1,
    D = 2,
    P = 3,
    R = 4,
}

impl AtomLevel {
    pub const ALL: [AtomLevel; 5] = [
        AtomLevel::Q0,
        AtomLevel::Q1,
        AtomLevel::D,
        AtomLevel::P,
        AtomLevel::R,
    ];

    pub fn ord(self) -> usize {
        self as usize
    }

    pub fn from_ord(i: usize) -> Option<AtomLevel> {
        AtomLevel::ALL.get(i).copied()
    }

    /// Short label used in file headers: "0", "1", "d", "p", "r".
    pub fn label(self) -> &'static str {
        match self {
            AtomLevel::Q0 => "0",
            AtomLevel::Q1 => "1",
            AtomLevel::D => "d",
            AtomLevel::P => "p",
            AtomLevel::R => "r",
        }
    }
}

/// Single-atom dimension.
pub const DIM: usize = 5;
/// Two-atom dimension.
pub const DIM2: usize = DIM * DIM;

/// Flat index of the product state |a⟩_control ⊗ |b⟩_target.
pub fn basis_index(a: AtomLevel, b: AtomLevel) -> usize {
    DIM * a.ord() + b.ord()
}

/// Inverse of [`basis_index`].
pub fn basis_pair(index: usize) -> (AtomLevel, AtomLevel) {
    assert!(index < DIM2);
    (
        AtomLevel::from_ord(index / DIM).unwrap(),
        AtomLevel::from_ord(index % DIM).unwrap(),
    )
}

/// Which atom of the pair an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Control,
    Target,
}

/// Branching ratios c_jk for spontaneous decay out of |p⟩ and |r⟩.
///
/// Targets of |p⟩ decay are {|0⟩, |1⟩, |D⟩}; targets of |r⟩ decay are
/// {|0⟩, |1⟩, |D⟩, |p⟩}. Each group must sum to one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchingRatios {
    pub c_0p: f64,
    pub c_1p: f64,
    pub c_dp: f64,
    pub c_0r: f64,
    pub c_1r: f64,
    pub c_pr: f64,
    pub c_dr: f64,
}

impl Default for BranchingRatios {
    fn default() -> Self {
        BranchingRatios {
            c_0p: 1.0 / 16.0,
            c_1p: 1.0 / 16.0,
            c_dp: 7.0 / 8.0,
            c_0r: 1.0 / 32.0,
            c_1r: 1.0 / 32.0,
            c_pr: 1.0 / 2.0,
            c_dr: 7.0 / 16.0,
        }
    }
}

impl BranchingRatios {
    /// Decay channels out of |p⟩ as (target, ratio).
    pub fn from_p(&self) -> [(AtomLevel, f64); 3] {
        [
            (AtomLevel::Q0, self.c_0p),
            (AtomLevel::Q1, self.c_1p),
            (AtomLevel::D, self.c_dp),
        ]
    }

    /// Decay channels out of |r⟩ as (target, ratio). The |p⟩ target exists
    /// only for the Rydberg source.
    pub fn from_r(&self) -> [(AtomLevel, f64); 4] {
        [
            (AtomLevel::Q0, self.c_0r),
            (AtomLevel::Q1, self.c_1r),
            (AtomLevel::D, self.c_dr),
            (AtomLevel::P, self.c_pr),
        ]
    }

    pub fn validate(&self) -> Result<()> {
        let all = [
            self.c_0p, self.c_1p, self.c_dp, self.c_0r, self.c_1r, self.c_pr, self.c_dr,
        ];
        for v in all {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParam(format!("branching ratio {v}")));
            }
        }
        let sum_p: f64 = self.from_p().iter().map(|(_, c)| c).sum();
        let sum_r: f64 = self.from_r().iter().map(|(_, c)| c).sum();
        if (sum_p - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParam(format!(
                "branching ratios out of |p> sum to {sum_p}, expected 1"
            )));
        }
        if (sum_r - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParam(format!(
                "branching ratios out of |r> sum to {sum_r}, expected 1"
            )));
        }
        Ok(())
    }
}

/// Static system parameters: Rydberg interaction, decay rates, branching.
///
/// All frequencies angular in rad/us, rates in 1/us.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// Rydberg-Rydberg shift of |rr⟩, rad/us.
    pub b_rr: f64,
    /// Decay rate of |p⟩, 1/us.
    pub gamma_p: f64,
    /// Decay rate of |r⟩, 1/us.
    pub gamma_r: f64,
    pub branching: BranchingRatios,
    /// Convention used to translate user-facing MHz values; recorded so that
    /// outputs stay self-describing. Internal values are always angular.
    pub freq_convention: FreqConvention,
}

impl Default for SystemParams {
    fn default() -> Self {
        let conv = FreqConvention::Cyclic;
        SystemParams {
            b_rr: conv.to_angular(500.0),
            gamma_p: 1.0 / 0.155,
            gamma_r: 1.0 / 540.0,
            branching: BranchingRatios::default(),
            freq_convention: conv,
        }
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        for (what, v) in [
            ("b_rr", self.b_rr),
            ("gamma_p", self.gamma_p),
            ("gamma_r", self.gamma_r),
        ] {
            if !v.is_finite() {
                return Err(Error::NonFinite { what, value: v });
            }
            if v < 0.0 {
                return Err(Error::InvalidParam(format!("{what} = {v} must be >= 0")));
            }
        }
        self.branching.validate()
    }

    /// Decay rate of a level (zero for the stable ones).
    pub fn gamma_of(&self, level: AtomLevel) -> f64 {
        match level {
            AtomLevel::P => self.gamma_p,
            AtomLevel::R => self.gamma_r,
            _ => 0.0,
        }
    }

    /// All 14 decay channels as (atom, target j, source k, rate c_jk·γ_k).
    pub fn decay_channels(&self) -> Vec<(Atom, AtomLevel, AtomLevel, f64)> {
        let mut out = Vec::with_capacity(14);
        for atom in [Atom::Control, Atom::Target] {
            for (j, c) in self.branching.from_p() {
                out.push((atom, j, AtomLevel::P, c * self.gamma_p));
            }
            for (j, c) in self.branching.from_r() {
                out.push((atom, j, AtomLevel::R, c * self.gamma_r));
            }
        }
        out
    }
}

/// Instantaneous drive values, all angular rad/us.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlsAt {
    pub omega_p: f64,
    pub omega_r: f64,
    pub delta_p: f64,
    /// Two-photon detuning Δ = Δ_p + Δ_r.
    pub delta: f64,
}

impl ControlsAt {
    pub const ZERO: ControlsAt = ControlsAt {
        omega_p: 0.0,
        omega_r: 0.0,
        delta_p: 0.0,
        delta: 0.0,
    };

    fn validate(&self) -> Result<()> {
        for (what, v) in [
            ("omega_p", self.omega_p),
            ("omega_r", self.omega_r),
            ("delta_p", self.delta_p),
            ("delta", self.delta),
        ] {
            if !v.is_finite() {
                return Err(Error::NonFinite { what, value: v });
            }
        }
        Ok(())
    }
}

/// Single-atom drive Hamiltonian, Δ_p|p⟩⟨p| + Δ|r⟩⟨r| + [Ω_p/2 |p⟩⟨1| +
/// Ω_r/2 |r⟩⟨p| + h.c.]. Rows and columns of |0⟩ and |D⟩ are zero.
pub fn single_atom_hamiltonian(c: ControlsAt) -> Array2<C64> {
    let mut h = Array2::from_elem((DIM, DIM), C64::new(0.0, 0.0));
    let (q1, p, r) = (
        AtomLevel::Q1.ord(),
        AtomLevel::P.ord(),
        AtomLevel::R.ord(),
    );
    h[[p, p]] = C64::new(c.delta_p, 0.0);
    h[[r, r]] = C64::new(c.delta, 0.0);
    h[[p, q1]] = C64::new(0.5 * c.omega_p, 0.0);
    h[[q1, p]] = C64::new(0.5 * c.omega_p, 0.0);
    h[[r, p]] = C64::new(0.5 * c.omega_r, 0.0);
    h[[p, r]] = C64::new(0.5 * c.omega_r, 0.0);
    h
}

/// Embed a single-atom operator into the pair space on the given atom.
pub fn embed_single(op: &Array2<C64>, atom: Atom) -> Array2<C64> {
    let eye = Array2::eye(DIM);
    match atom {
        Atom::Control => ndarray::linalg::kron(op, &eye),
        Atom::Target => ndarray::linalg::kron(&eye, op),
    }
}

/// Two-atom Hamiltonian H = h⊗I + I⊗h + B_rr |rr⟩⟨rr| at the given instant.
pub fn build_hamiltonian(params: &SystemParams, c: ControlsAt) -> Result<Array2<C64>> {
    c.validate()?;
    if !params.b_rr.is_finite() {
        return Err(Error::NonFinite {
            what: "b_rr",
            value: params.b_rr,
        });
    }
    let h1 = single_atom_hamiltonian(c);
    let mut h = embed_single(&h1, Atom::Control) + embed_single(&h1, Atom::Target);
    let rr = basis_index(AtomLevel::R, AtomLevel::R);
    h[[rr, rr]] += C64::new(params.b_rr, 0.0);
    Ok(h)
}

/// The 14 collapse operators √(c_jk γ_k) |j⟩_i⟨k| ⊗ 1, ordered control atom
/// first, |p⟩ channels before |r⟩ channels.
pub fn build_collapse_ops(params: &SystemParams) -> Result<Vec<Array2<C64>>> {
    params.validate()?;
    let mut ops = Vec::with_capacity(14);
    for (atom, j, k, rate) in params.decay_channels() {
        let mut l = Array2::from_elem((DIM, DIM), C64::new(0.0, 0.0));
        l[[j.ord(), k.ord()]] = C64::new(rate.sqrt(), 0.0);
        ops.push(embed_single(&l, atom));
    }
    Ok(ops)
}
