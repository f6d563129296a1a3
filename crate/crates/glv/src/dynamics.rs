use graphdyn_core::{BoolTensor, FlowMap, VBTensor, VBVector};

use crate::params::GlvParams;

/// Generalized Lotka-Volterra flow over the live basis:
///   dx_p = x_p * (rho_p + sum_q a_pq w_pq x_q + u * eps_p)
///   dw_pq = alpha * w_pq * a_pq + beta * x_p * x_q
/// With `weight_dynamics` off the weight derivative is identically zero.
///
/// The Hebbian beta term is evaluated on every pair of the square basis; the
/// integrator masks non-edges after each step, so the adjacency pattern never
/// gains entries during flow.
pub struct GlvFlow<'a> {
    pub params: &'a GlvParams,
    pub weight_dynamics: bool,
}

impl FlowMap<f64> for GlvFlow<'_> {
    fn rhs(
        &self,
        x: &VBVector<f64>,
        w: &VBTensor<f64>,
        a: &BoolTensor,
        u: f64,
    ) -> (VBVector<f64>, VBTensor<f64>) {
        let p = self.params;
        let dx = VBVector::from_pairs(x.iter().map(|(i, xi)| {
            let rho = *p.growth.get(&i).expect("params cover every live label");
            let eps = *p.susceptibility.get(&i).expect("params cover every live label");
            // masked matrix-vector product; the mask matters mid-step where
            // stage values of w may be nonzero on non-edges
            let interaction: f64 = x
                .iter()
                .map(|(j, xj)| if a.is_set(i, j) { w.get(i, j).unwrap_or(0.0) * xj } else { 0.0 })
                .sum();
            (i, xi * (rho + interaction + u * eps))
        }));
        let dw = if self.weight_dynamics {
            VBTensor::from_pairs(w.iter().map(|((i, j), wij)| {
                let decay = if a.is_set(i, j) { p.alpha * wij } else { 0.0 };
                let hebb = p.beta * x.get(i).unwrap_or(0.0) * x.get(j).unwrap_or(0.0);
                ((i, j), decay + hebb)
            }))
        } else {
            w.map_values(|_| 0.0)
        };
        (dx, dw)
    }
}

/// Antibiotic control signal: on during [0, t_star), off from t_star.
pub fn antibiotic_u(t: f64, t_star: f64) -> f64 {
    if t >= 0.0 && t < t_star {
        1.0
    } else {
        0.0
    }
}
