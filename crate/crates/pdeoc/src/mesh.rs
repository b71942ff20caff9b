//! Temporal multi-interval mesh, spatial element grid, and the global block
//! temporal differentiation matrix.
//!
//! Time is mapped affinely twice: the horizon [t0, tf] onto tau in [-1, 1],
//! and each mesh interval [tau_{j-1}, tau_j] onto the Radau reference
//! coordinate r in [-1, 1]. The product of the two map derivatives is the
//! interval scale factor psi^(j) that multiplies every "right-hand side"
//! quantity in the collocated dynamics.

use crate::interp::lagrange_diff_matrix;
use crate::quadrature::{flipped_lgr_rule, standard_lgr_rule, RadauRule};
use crate::scalar::Real;
use crate::{Error, Result};
use sprs::{CsMat, TriMat};

/// Multi-interval temporal collocation mesh.
#[derive(Debug, Clone)]
pub struct TemporalMesh<T> {
    pub t0: T,
    pub tf: T,
    /// tau_0 .. tau_J, strictly increasing, tau_0 = -1 and tau_J = +1.
    pub mesh_points: Vec<T>,
    /// Collocation points per interval, N_t^(j).
    pub points_per_interval: Vec<usize>,
    /// psi^(j) = (tf - t0)/2 * (tau_j - tau_{j-1})/2.
    pub psi: Vec<T>,
    /// Per-interval Radau rule (flipped for the production scheme).
    pub rules: Vec<RadauRule<T>>,
}

impl<T: Real> TemporalMesh<T> {
    pub fn n_intervals(&self) -> usize {
        self.points_per_interval.len()
    }

    /// Total collocation count across intervals.
    pub fn n_collocation(&self) -> usize {
        self.points_per_interval.iter().sum()
    }

    /// Global support-point count: one noncollocated point plus all
    /// collocation points (interval boundaries are shared).
    pub fn n_support(&self) -> usize {
        self.n_collocation() + 1
    }

    pub fn flipped(&self) -> bool {
        self.rules[0].flipped
    }

    /// Global collocation index of interval j's first collocation point.
    pub fn interval_offset(&self, j: usize) -> usize {
        self.points_per_interval[..j].iter().sum()
    }

    /// Interval containing the global collocation index.
    pub fn interval_of_collocation(&self, i: usize) -> usize {
        let mut acc = 0;
        for (j, &n) in self.points_per_interval.iter().enumerate() {
            acc += n;
            if i < acc {
                return j;
            }
        }
        panic!("collocation index {i} out of range");
    }

    /// Physical time bounds of interval j.
    pub fn interval_time_bounds(&self, j: usize) -> (T, T) {
        (self.map_tau(self.mesh_points[j]), self.map_tau(self.mesh_points[j + 1]))
    }

    fn map_tau(&self, tau: T) -> T {
        if tau == T::of(-1.0) {
            self.t0
        } else if tau == T::of(1.0) {
            self.tf
        } else {
            self.t0 + (self.tf - self.t0) * (tau + T::one()) / T::of(2.0)
        }
    }

    /// Times of the global support points (noncollocated initial point under
    /// the flipped scheme, terminal point under the standard scheme).
    pub fn support_times(&self) -> Vec<T> {
        let colloc = self.collocation_times();
        let mut out = Vec::with_capacity(colloc.len() + 1);
        if self.flipped() {
            out.push(self.t0);
            out.extend(colloc);
        } else {
            out.extend(colloc);
            out.push(self.tf);
        }
        out
    }

    /// Local reference support points of interval j (collocation nodes plus
    /// the noncollocated endpoint).
    pub fn local_support_r(&self, j: usize) -> Vec<T> {
        let rule = &self.rules[j];
        let mut support = Vec::with_capacity(rule.n_points + 1);
        if rule.flipped {
            support.push(T::of(-1.0));
            support.extend_from_slice(&rule.nodes);
        } else {
            support.extend_from_slice(&rule.nodes);
            support.push(T::of(1.0));
        }
        support
    }

    /// Global support indices spanned by interval j (its block columns in the
    /// global differentiation matrix). Always `interval_offset(j)` through
    /// `interval_offset(j) + N_t^(j)` inclusive, for both schemes.
    pub fn interval_support_range(&self, j: usize) -> std::ops::RangeInclusive<usize> {
        let off = self.interval_offset(j);
        off..=(off + self.points_per_interval[j])
    }

    /// Per-collocation-point quadrature weights against untransformed time:
    /// omega_i = psi^(j(i)) * w_i.
    pub fn time_weights(&self) -> Vec<T> {
        let mut omega = Vec::with_capacity(self.n_collocation());
        for (j, rule) in self.rules.iter().enumerate() {
            for &w in &rule.weights {
                omega.push(self.psi[j] * w);
            }
        }
        omega
    }

    /// psi^(j) for the interval containing collocation point i.
    pub fn psi_at(&self, i: usize) -> T {
        self.psi[self.interval_of_collocation(i)]
    }
}

/// Builds a flipped-Radau temporal mesh.
///
/// `interval_fractions` are the relative interval widths (positive, summing
/// to 1); `points_per_interval` the collocation counts N_t^(j) >= 1.
pub fn build_temporal_mesh<T: Real>(
    t0: T,
    tf: T,
    interval_fractions: &[T],
    points_per_interval: &[usize],
) -> Result<TemporalMesh<T>> {
    build_temporal_mesh_with_scheme(t0, tf, interval_fractions, points_per_interval, true)
}

/// As [`build_temporal_mesh`] but selecting the temporal rule family; the
/// standard (left-included) rule exists for the well-posedness comparison.
pub fn build_temporal_mesh_with_scheme<T: Real>(
    t0: T,
    tf: T,
    interval_fractions: &[T],
    points_per_interval: &[usize],
    flipped: bool,
) -> Result<TemporalMesh<T>> {
    if !(tf > t0) {
        return Err(Error::InvalidMesh(format!("need tf > t0, got [{t0}, {tf}]")));
    }
    if interval_fractions.is_empty() || interval_fractions.len() != points_per_interval.len() {
        return Err(Error::InvalidMesh(
            "interval fractions and per-interval point counts must match and be nonempty".into(),
        ));
    }
    if points_per_interval.iter().any(|&n| n == 0) {
        return Err(Error::InvalidMesh("every interval needs at least one point".into()));
    }
    let sum = interval_fractions
        .iter()
        .fold(T::zero(), |acc, &f| acc + f);
    if (sum - T::one()).abs() > T::of(1e-10) {
        return Err(Error::InvalidMesh(format!(
            "interval fractions must sum to 1, got {sum}"
        )));
    }
    let j_total = interval_fractions.len();
    let mut mesh_points = Vec::with_capacity(j_total + 1);
    mesh_points.push(T::of(-1.0));
    let mut acc = T::zero();
    for (j, &f) in interval_fractions.iter().enumerate() {
        if !(f > T::zero()) {
            return Err(Error::InvalidMesh("interval fractions must be positive".into()));
        }
        acc = acc + f;
        let tau = if j + 1 == j_total {
            T::one()
        } else {
            -T::one() + T::of(2.0) * acc
        };
        if tau <= mesh_points[j] {
            return Err(Error::InvalidMesh("zero-width temporal interval".into()));
        }
        mesh_points.push(tau);
    }
    let half_horizon = (tf - t0) / T::of(2.0);
    let mut psi = Vec::with_capacity(j_total);
    let mut rules = Vec::with_capacity(j_total);
    for j in 0..j_total {
        let dtau = mesh_points[j + 1] - mesh_points[j];
        psi.push(half_horizon * dtau / T::of(2.0));
        rules.push(if flipped {
            flipped_lgr_rule(points_per_interval[j])?
        } else {
            standard_lgr_rule(points_per_interval[j])?
        });
    }
    Ok(TemporalMesh {
        t0,
        tf,
        mesh_points,
        points_per_interval: points_per_interval.to_vec(),
        psi,
        rules,
    })
}

/// Times of all collocation points, ascending. Under the flipped scheme the
/// last entry is exactly `tf` (node +1 maps onto the interval boundary).
pub fn collocation_times<T: Real>(mesh: &TemporalMesh<T>) -> Vec<T> {
    let mut times = Vec::with_capacity(mesh.n_collocation());
    for j in 0..mesh.n_intervals() {
        let (t_left, t_right) = mesh.interval_time_bounds(j);
        for &r in &mesh.rules[j].nodes {
            if r == T::one() {
                times.push(t_right);
            } else if r == T::of(-1.0) {
                times.push(t_left);
            } else {
                times.push(t_left + mesh.psi[j] * (r + T::one()));
            }
        }
    }
    times
}

/// Assembles the global temporal differentiation matrix D_t, an
/// N_colloc x (N_colloc + 1) block matrix in which consecutive interval
/// blocks overlap in exactly one column (the shared support variable that
/// realizes state continuity).
pub fn assemble_global_diff_matrix<T: Real>(mesh: &TemporalMesh<T>) -> CsMat<T> {
    let rows = mesh.n_collocation();
    let cols = mesh.n_support();
    let mut tri = TriMat::new((rows, cols));
    for j in 0..mesh.n_intervals() {
        let support = mesh.local_support_r(j);
        let local =
            lagrange_diff_matrix(&support, &mesh.rules[j].nodes).expect("distinct Radau nodes");
        let row0 = mesh.interval_offset(j);
        let col0 = *mesh.interval_support_range(j).start();
        for i in 0..local.rows() {
            for n in 0..local.cols() {
                tri.add_triplet(row0 + i, col0 + n, local.at(i, n));
            }
        }
    }
    tri.to_csr()
}

/// Uniform spatial element grid on [0, 1] with P-1 or P-2 Lagrange elements
/// and a per-element Radau quadrature rule.
#[derive(Debug, Clone)]
pub struct SpatialGrid<T> {
    /// x_0 .. x_{N_x - 1}, ascending, spanning [0, 1] exactly.
    pub nodes: Vec<T>,
    /// Polynomial degree p of the elements (1 or 2).
    pub degree: usize,
    pub n_elements: usize,
    /// Element-local quadrature rule with n_x points.
    pub quad: RadauRule<T>,
}

impl<T: Real> SpatialGrid<T> {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Global node ids owned by element e (p + 1 of them).
    pub fn element_nodes(&self, e: usize) -> Vec<usize> {
        (0..=self.degree).map(|l| self.degree * e + l).collect()
    }

    /// Left edge and width of element e.
    pub fn element_span(&self, e: usize) -> (T, T) {
        let left = self.nodes[self.degree * e];
        let right = self.nodes[self.degree * (e + 1)];
        (left, right - left)
    }

    /// Total spatial quadrature point count, n_x per element.
    pub fn n_quad_total(&self) -> usize {
        self.quad.n_points * self.n_elements
    }

    /// Element containing x (boundary points resolve to the touching
    /// element with the lower index).
    pub fn element_containing(&self, x: T) -> Result<usize> {
        let lo = self.nodes[0];
        let hi = *self.nodes.last().unwrap();
        if x < lo || x > hi {
            return Err(Error::OutOfDomain {
                x: x.to_f64().unwrap_or(f64::NAN),
                lo: lo.to_f64().unwrap_or(f64::NAN),
                hi: hi.to_f64().unwrap_or(f64::NAN),
            });
        }
        for e in 0..self.n_elements {
            let (left, h) = self.element_span(e);
            if x <= left + h || e + 1 == self.n_elements {
                return Ok(e);
            }
        }
        unreachable!()
    }
}

/// Builds the uniform spatial grid: `n_elements` elements of degree
/// `degree` in {1, 2} (so p * n_elements + 1 nodes) and an n_x-point
/// per-element rule with `quad_points >= degree + 1`.
pub fn build_spatial_grid<T: Real>(
    n_elements: usize,
    degree: usize,
    quad_points: usize,
) -> Result<SpatialGrid<T>> {
    if !(degree == 1 || degree == 2) {
        return Err(Error::InvalidConfig(format!(
            "element degree must be 1 or 2, got {degree}"
        )));
    }
    if n_elements < 2 {
        return Err(Error::InvalidConfig(
            "need at least two spatial elements".into(),
        ));
    }
    if quad_points < degree + 1 {
        return Err(Error::InvalidConfig(format!(
            "need at least {} quadrature points per element for degree {degree}",
            degree + 1
        )));
    }
    let count = degree * n_elements + 1;
    let denom = T::usize(count - 1);
    let nodes = (0..count).map(|k| T::usize(k) / denom).collect();
    Ok(SpatialGrid {
        nodes,
        degree,
        n_elements,
        quad: flipped_lgr_rule(quad_points)?,
    })
}
