//! Adaptive embedded Runge-Kutta integrators on flat real state vectors.
//!
//! Two explicit methods are provided: Dormand-Prince 5(4) with FSAL, the
//! default, and Dormand-Prince 8(5,3) for long strongly-oscillatory
//! propagations where the higher order pays off. Complex systems are handled
//! by the caller as split re/im planes.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Right-hand side of dy/dt = f(t, y).
pub trait OdeSystem {
    fn rhs(&mut self, t: f64, y: &[f64], dydt: &mut [f64]);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OdeMethod {
    #[default]
    Dopri5,
    Dop853,
}

#[derive(Debug, Clone, Copy)]
pub struct OdeOpts {
    pub rtol: f64,
    pub atol: f64,
    pub h_max: Option<f64>,
    pub max_steps: usize,
    pub method: OdeMethod,
}

impl Default for OdeOpts {
    fn default() -> Self {
        OdeOpts {
            rtol: 1e-8,
            atol: 1e-10,
            h_max: None,
            max_steps: 20_000_000,
            method: OdeMethod::Dopri5,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OdeStats {
    pub steps_accepted: usize,
    pub steps_rejected: usize,
    pub rhs_evals: usize,
}

/// out = y + Σ_m hc[m]·ks[m], fixed arity so the loop vectorizes.
#[inline]
fn lincomb<const N: usize>(out: &mut [f64], y: &[f64], hc: &[f64; N], ks: [&[f64]; N]) {
    let n = out.len();
    assert_eq!(y.len(), n);
    for k in ks {
        assert_eq!(k.len(), n);
    }
    for j in 0..n {
        let mut acc = y[j];
        for m in 0..N {
            acc += hc[m] * ks[m][j];
        }
        out[j] = acc;
    }
}

struct Controller {
    safe: f64,
    fac_shrink: f64, // lower bound on h_new/h
    fac_grow: f64,   // upper bound on h_new/h
    beta: f64,
    expo1: f64,
    facold: f64,
}

impl Controller {
    fn new(order_exp: f64, beta: f64, fac_shrink: f64, fac_grow: f64) -> Self {
        Controller {
            safe: 0.9,
            fac_shrink,
            fac_grow,
            beta,
            expo1: order_exp - beta * 0.2,
            facold: 1e-4,
        }
    }

    /// Step-size factor after a step with scaled error `err`.
    fn factor(&mut self, err: f64, accepted: bool) -> f64 {
        let fac11 = err.powf(self.expo1);
        let fac = fac11 / self.facold.powf(self.beta);
        let fac = (fac / self.safe).clamp(1.0 / self.fac_grow, 1.0 / self.fac_shrink);
        if accepted {
            self.facold = err.max(1e-4);
            1.0 / fac
        } else {
            // never grow after a rejection
            (1.0 / fac).min(1.0)
        }
    }
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4)
// ---------------------------------------------------------------------------

mod dp5 {
    pub const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
    pub const A2: [f64; 1] = [0.2];
    pub const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
    pub const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
    pub const A5: [f64; 4] = [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
    ];
    pub const A6: [f64; 5] = [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
    ];
    pub const B: [f64; 6] = [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ];
    /// b - b̂ (5th minus embedded 4th order weights), including the k7 term.
    pub const E: [f64; 7] = [
        71.0 / 57600.0,
        0.0,
        -71.0 / 16695.0,
        71.0 / 1920.0,
        -17253.0 / 339200.0,
        22.0 / 525.0,
        -1.0 / 40.0,
    ];
}

struct Dopri5 {
    k: Vec<Vec<f64>>, // 7 stage derivatives
    fresh_k1: bool,
}

impl Dopri5 {
    fn new(n: usize) -> Self {
        Dopri5 {
            k: (0..7).map(|_| vec![0.0; n]).collect(),
            fresh_k1: false,
        }
    }

    /// One trial step; writes y1, returns the scaled error norm.
    fn try_step<S: OdeSystem>(
        &mut self,
        sys: &mut S,
        t: f64,
        h: f64,
        y: &[f64],
        y1: &mut [f64],
        opts: &OdeOpts,
        stats: &mut OdeStats,
    ) -> f64 {
        let kk = &mut self.k;
        if !self.fresh_k1 {
            sys.rhs(t, y, &mut kk[0]);
            stats.rhs_evals += 1;
            self.fresh_k1 = true;
        }
        // y1 doubles as the scratch buffer for stage states
        let hc2 = [h * dp5::A2[0]];
        lincomb(y1, y, &hc2, [&kk[0]]);
        sys.rhs(t + dp5::C[1] * h, y1, &mut kk[1]);
        let hc3 = std::array::from_fn(|q| h * dp5::A3[q]);
        lincomb(y1, y, &hc3, [&kk[0], &kk[1]]);
        sys.rhs(t + dp5::C[2] * h, y1, &mut kk[2]);
        let hc4 = std::array::from_fn(|q| h * dp5::A4[q]);
        lincomb(y1, y, &hc4, [&kk[0], &kk[1], &kk[2]]);
        sys.rhs(t + dp5::C[3] * h, y1, &mut kk[3]);
        let hc5 = std::array::from_fn(|q| h * dp5::A5[q]);
        lincomb(y1, y, &hc5, [&kk[0], &kk[1], &kk[2], &kk[3]]);
        sys.rhs(t + dp5::C[4] * h, y1, &mut kk[4]);
        let hc6 = std::array::from_fn(|q| h * dp5::A6[q]);
        lincomb(y1, y, &hc6, [&kk[0], &kk[1], &kk[2], &kk[3], &kk[4]]);
        sys.rhs(t + dp5::C[5] * h, y1, &mut kk[5]);
        // 5th-order solution
        let hb = std::array::from_fn(|q| h * dp5::B[q]);
        lincomb(y1, y, &hb, [&kk[0], &kk[1], &kk[2], &kk[3], &kk[4], &kk[5]]);
        sys.rhs(t + h, y1, &mut kk[6]);
        stats.rhs_evals += 6;

        // scaled error norm
        let n = y.len();
        let (atol, rtol) = (opts.atol, opts.rtol);
        let mut acc = 0.0f64;
        for j in 0..n {
            let e = dp5::E[0] * kk[0][j]
                + dp5::E[2] * kk[2][j]
                + dp5::E[3] * kk[3][j]
                + dp5::E[4] * kk[4][j]
                + dp5::E[5] * kk[5][j]
                + dp5::E[6] * kk[6][j];
            let sk = atol + rtol * y[j].abs().max(y1[j].abs());
            let q = h * e / sk;
            acc += q * q;
        }
        (acc / n as f64).sqrt()
    }

    /// FSAL: the last stage derivative becomes k1 of the next step.
    fn accept(&mut self) {
        self.k.swap(0, 6);
        self.fresh_k1 = true;
    }
}

// ---------------------------------------------------------------------------
// Dormand-Prince 8(5,3), coefficients from Hairer's DOP853
// ---------------------------------------------------------------------------

#[allow(clippy::excessive_precision)]
mod dp8 {
    pub const C: [f64; 12] = [
        0.0,
        5.260015195876773e-2,
        7.89002279381516e-2,
        1.183503419072274e-1,
        2.816496580927726e-1,
        3.333333333333333e-1,
        0.25,
        3.076923076923077e-1,
        6.512820512820513e-1,
        0.6,
        8.571428571428571e-1,
        1.0,
    ];
    pub const A2: [f64; 1] = [5.260015195876773e-2];
    pub const A3: [f64; 2] = [1.97250569845379e-2, 5.91751709536137e-2];
    pub const A4: [f64; 2] = [2.958758547680685e-2, 8.876275643042054e-2]; // k1, k3
    pub const A5: [f64; 3] = [
        2.413651341592667e-1,
        -8.845494793282861e-1,
        9.24834003261792e-1,
    ]; // k1, k3, k4
    pub const A6: [f64; 3] = [
        3.7037037037037035e-2,
        1.7082860872947386e-1,
        1.2546768756682242e-1,
    ]; // k1, k4, k5
    pub const A7: [f64; 4] = [
        3.7109375e-2,
        1.7025221101954405e-1,
        6.021653898045596e-2,
        -1.7578125e-2,
    ]; // k1, k4, k5, k6
    pub const A8: [f64; 5] = [
        3.709200011850479e-2,
        1.7038392571223998e-1,
        1.0726203044637328e-1,
        -1.5319437748624402e-2,
        8.273789163814023e-3,
    ]; // k1, k4..k7
    pub const A9: [f64; 6] = [
        6.241109587160757e-1,
        -3.3608926294469414,
        -8.68219346841726e-1,
        2.759209969944671e1,
        2.0154067550477894e1,
        -4.348988418106996e1,
    ]; // k1, k4..k8
    pub const A10: [f64; 7] = [
        4.7766253643826434e-1,
        -2.4881146199716677,
        -5.90290826836843e-1,
        2.1230051448181193e1,
        1.5279233632882423e1,
        -3.328821096898486e1,
        -2.0331201708508627e-2,
    ]; // k1, k4..k9
    pub const A11: [f64; 8] = [
        -9.371424300859873e-1,
        5.186372428844064,
        1.0914373489967295,
        -8.149787010746927,
        -1.852006565999696e1,
        2.2739487099350505e1,
        2.4936055526796523,
        -3.0467644718982196,
    ]; // k1, k4..k10
    pub const A12: [f64; 9] = [
        2.273310147516538,
        -1.053449546673725e1,
        -2.0008720582248625,
        -1.79589318631188e1,
        2.794888452941996e1,
        -2.8589982771350235,
        -8.87285693353063,
        1.2360567175794303e1,
        6.433927460157636e-1,
    ]; // k1, k4..k11
    pub const B: [f64; 8] = [
        5.4293734116568765e-2,
        4.450312892752409,
        1.8915178993145003,
        -5.801203960010585,
        3.111643669578199e-1,
        -1.521609496625161e-1,
        2.0136540080403034e-1,
        4.471061572777259e-2,
    ]; // k1, k6..k12
    pub const ER: [f64; 8] = [
        1.312004499419488e-2,
        -1.2251564463762044,
        -4.957589496572502e-1,
        1.6643771824549864,
        -3.5032884874997366e-1,
        3.341791187130175e-1,
        8.192320648511571e-2,
        -2.2355307863886294e-2,
    ]; // 5th-order error: k1, k6..k12
    pub const BHH: [f64; 3] = [
        2.440944881889764e-1,
        7.338466882816118e-1,
        2.2058823529411766e-2,
    ]; // 3rd-order comparison: k1, k9, k12
}

struct Dop853 {
    k: Vec<Vec<f64>>, // 12 stage derivatives
    ytmp: Vec<f64>,
    fresh_k1: bool,
}

impl Dop853 {
    fn new(n: usize) -> Self {
        Dop853 {
            k: (0..12).map(|_| vec![0.0; n]).collect(),
            ytmp: vec![0.0; n],
            fresh_k1: false,
        }
    }

    fn try_step<S: OdeSystem>(
        &mut self,
        sys: &mut S,
        t: f64,
        h: f64,
        y: &[f64],
        y1: &mut [f64],
        opts: &OdeOpts,
        stats: &mut OdeStats,
    ) -> f64 {
        if !self.fresh_k1 {
            sys.rhs(t, y, &mut self.k[0]);
            stats.rhs_evals += 1;
            self.fresh_k1 = true;
        }
        let yt = &mut self.ytmp;

        macro_rules! stage {
            ($dst:expr, $cs:expr, $c:expr, [$($m:expr),*]) => {{
                let hc = std::array::from_fn(|q| h * $cs[q]);
                {
                    let ks = [$(&self.k[$m] as &[f64]),*];
                    lincomb(yt, y, &hc, ks);
                }
                sys.rhs(t + $c * h, yt, &mut self.k[$dst]);
                stats.rhs_evals += 1;
            }};
        }

        stage!(1, dp8::A2, dp8::C[1], [0]);
        stage!(2, dp8::A3, dp8::C[2], [0, 1]);
        stage!(3, dp8::A4, dp8::C[3], [0, 2]);
        stage!(4, dp8::A5, dp8::C[4], [0, 2, 3]);
        stage!(5, dp8::A6, dp8::C[5], [0, 3, 4]);
        stage!(6, dp8::A7, dp8::C[6], [0, 3, 4, 5]);
        stage!(7, dp8::A8, dp8::C[7], [0, 3, 4, 5, 6]);
        stage!(8, dp8::A9, dp8::C[8], [0, 3, 4, 5, 6, 7]);
        stage!(9, dp8::A10, dp8::C[9], [0, 3, 4, 5, 6, 7, 8]);
        stage!(10, dp8::A11, dp8::C[10], [0, 3, 4, 5, 6, 7, 8, 9]);
        stage!(11, dp8::A12, dp8::C[11], [0, 3, 4, 5, 6, 7, 8, 9, 10]);

        // 8th-order solution from k1, k6..k12
        let hb: [f64; 8] = std::array::from_fn(|q| h * dp8::B[q]);
        {
            let ks = [
                &self.k[0] as &[f64],
                &self.k[5],
                &self.k[6],
                &self.k[7],
                &self.k[8],
                &self.k[9],
                &self.k[10],
                &self.k[11],
            ];
            lincomb(y1, y, &hb, ks);
        }

        // combined 5th/3rd order error estimate
        let n = y.len();
        let (atol, rtol) = (opts.atol, opts.rtol);
        let mut err5 = 0.0f64;
        let mut err3 = 0.0f64;
        let k = &self.k;
        for j in 0..n {
            let sk = atol + rtol * y[j].abs().max(y1[j].abs());
            let e5 = dp8::ER[0] * k[0][j]
                + dp8::ER[1] * k[5][j]
                + dp8::ER[2] * k[6][j]
                + dp8::ER[3] * k[7][j]
                + dp8::ER[4] * k[8][j]
                + dp8::ER[5] * k[9][j]
                + dp8::ER[6] * k[10][j]
                + dp8::ER[7] * k[11][j];
            // (y1 - y)/h - bhh-weighted stages
            let e3 = dp8::B[0] * k[0][j]
                + dp8::B[1] * k[5][j]
                + dp8::B[2] * k[6][j]
                + dp8::B[3] * k[7][j]
                + dp8::B[4] * k[8][j]
                + dp8::B[5] * k[9][j]
                + dp8::B[6] * k[10][j]
                + dp8::B[7] * k[11][j]
                - dp8::BHH[0] * k[0][j]
                - dp8::BHH[1] * k[8][j]
                - dp8::BHH[2] * k[11][j];
            let q5 = e5 / sk;
            let q3 = e3 / sk;
            err5 += q5 * q5;
            err3 += q3 * q3;
        }
        let mut deno = err5 + 0.01 * err3;
        if deno <= 0.0 {
            deno = 1.0;
        }
        h.abs() * err5 * (1.0 / (deno * n as f64)).sqrt()
    }

    fn accept<S: OdeSystem>(&mut self, sys: &mut S, t1: f64, y1: &[f64], stats: &mut OdeStats) {
        sys.rhs(t1, y1, &mut self.k[0]);
        stats.rhs_evals += 1;
        self.fresh_k1 = true;
    }
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

enum Core {
    Dopri5(Dopri5),
    Dop853(Dop853),
}

/// Integrate from `t0` through every time in `outputs` (ascending; the first
/// entry may equal `t0`). `on_output(index, t, y)` is invoked at each output
/// time; the state is left at the final output time.
pub fn integrate<S: OdeSystem>(
    sys: &mut S,
    y: &mut Vec<f64>,
    t0: f64,
    outputs: &[f64],
    opts: &OdeOpts,
    mut on_output: impl FnMut(usize, f64, &[f64]),
) -> Result<OdeStats> {
    let mut stats = OdeStats::default();
    let n = y.len();
    if outputs.is_empty() {
        return Ok(stats);
    }
    for w in outputs.windows(2) {
        if !(w[1] >= w[0]) {
            return Err(Error::InvalidParam("output times must be ascending".into()));
        }
    }
    if outputs[0] < t0 {
        return Err(Error::InvalidParam("output time before t0".into()));
    }
    let t_end = *outputs.last().unwrap();
    let span = t_end - t0;
    // times within this of an output count as having reached it
    let t_fuzz = span.abs() * 1e-14 + 1e-300;

    let mut t = t0;
    let mut out_idx = 0usize;
    while out_idx < outputs.len() && outputs[out_idx] <= t + t_fuzz {
        on_output(out_idx, t, y);
        out_idx += 1;
    }
    if out_idx >= outputs.len() {
        return Ok(stats);
    }

    let mut core = match opts.method {
        OdeMethod::Dopri5 => Core::Dopri5(Dopri5::new(n)),
        OdeMethod::Dop853 => Core::Dop853(Dop853::new(n)),
    };
    let mut ctrl = match opts.method {
        OdeMethod::Dopri5 => Controller::new(0.2, 0.04, 0.2, 10.0),
        OdeMethod::Dop853 => Controller::new(1.0 / 8.0, 0.0, 1.0 / 3.0, 6.0),
    };

    // initial step size from the scaled magnitudes of y and f(t0, y)
    let mut f0 = vec![0.0; n];
    sys.rhs(t0, y, &mut f0);
    stats.rhs_evals += 1;
    let mut d0 = 0.0f64;
    let mut d1 = 0.0f64;
    for j in 0..n {
        let sk = opts.atol + opts.rtol * y[j].abs();
        d0 += (y[j] / sk).powi(2);
        d1 += (f0[j] / sk).powi(2);
    }
    let (d0, d1) = ((d0 / n as f64).sqrt(), (d1 / n as f64).sqrt());
    let h_max = opts.h_max.unwrap_or(span).min(span);
    // h is the controller's preferred step; individual steps may be clippeder
    let mut h = if d0 < 1e-8 || d1 < 1e-8 {
        1e-6 * span
    } else {
        0.01 * d0 / d1
    }
    .min(h_max)
    .max(span * 1e-12);

    let mut y1 = vec![0.0; n];
    let mut consecutive_rejects = 0usize;

    loop {
        if stats.steps_accepted + stats.steps_rejected >= opts.max_steps {
            return Err(Error::Integration {
                t,
                reason: format!("exceeded {} steps", opts.max_steps),
            });
        }
        let t_target = outputs[out_idx];
        let dt_target = t_target - t;
        let clipped = h >= dt_target;
        let h_step = if clipped { dt_target } else { h };
        if h_step <= f64::EPSILON * 16.0 * t.abs().max(1e-3) && !clipped {
            return Err(Error::Integration {
                t,
                reason: "step size underflow".into(),
            });
        }

        let err = match &mut core {
            Core::Dopri5(c) => c.try_step(sys, t, h_step, y, &mut y1, opts, &mut stats),
            Core::Dop853(c) => c.try_step(sys, t, h_step, y, &mut y1, opts, &mut stats),
        };
        let accepted = err.is_finite() && err <= 1.0;
        let fac = if err.is_finite() {
            ctrl.factor(err, accepted)
        } else {
            0.25
        };

        if accepted {
            consecutive_rejects = 0;
            stats.steps_accepted += 1;
            t = if clipped { t_target } else { t + h_step };
            std::mem::swap(y, &mut y1);
            match &mut core {
                Core::Dopri5(c) => c.accept(),
                Core::Dop853(c) => c.accept(sys, t, y, &mut stats),
            }
            while out_idx < outputs.len() && outputs[out_idx] <= t + t_fuzz {
                on_output(out_idx, t, y);
                out_idx += 1;
            }
            if out_idx >= outputs.len() {
                return Ok(stats);
            }
            if !clipped {
                h = (h_step * fac).min(h_max);
            }
            // after a clipped step the controller's preferred h is kept
        } else {
            stats.steps_rejected += 1;
            consecutive_rejects += 1;
            if consecutive_rejects > 60 {
                return Err(Error::Integration {
                    t,
                    reason: "no acceptable step size (error estimate stuck)".into(),
                });
            }
            // k1 at (t, y) remains valid after a rejection
            h = h_step * fac;
            if h <= f64::EPSILON * 16.0 * t.abs().max(1e-3) {
                return Err(Error::Integration {
                    t,
                    reason: "step size underflow".into(),
                });
            }
        }
    }
}
