//! Lex ideals, Gotzmann tests, componentwise lexsegment ideals, linear
//! resolutions of lexsegment ideals and minimality of the Taylor resolution.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::{
    has_componentwise_linear_quotients, has_linear_quotients, has_linear_resolution, is_componentwise_linear,
    MonomialIdeal, Verdict, LINQUOT_LIMIT, TAYLOR_CAP,
};
use crate::lexsegments::{build, is_completely, shadow, Flavor};
use crate::macaulay::op_upper;
use crate::monomial::{binomial, enumerate_degree, Monomial};

/// Iterated degrees are bounded here.  Gotzmann numbers grow fast: the lex
/// ideal of `(x1 x4^3, x2^4)` has its last generator in degree 89.
const DEGREE_STEPS: u32 = 256;

fn class_size(n: usize, d: u32) -> Result<u128> {
    binomial(n as u64 + d as u64 - 1, d as u64).ok_or(Error::Overflow("class size"))
}

/// `dim_k (S/I)_j`.
fn quotient_value(i: &MonomialIdeal, j: u32) -> Result<u128> {
    Ok(class_size(i.n(), j)? - i.hilbert_value(j)?)
}

/// The lex ideal with the Hilbert function of `I`.  Degree `j` is the
/// initial lexsegment of size `dim_k I_j`; generation stops once `I` has no
/// generators left above `j` and the quotient grows maximally from `j`, so
/// that persistence fixes every later degree.
pub fn lex_ideal_of(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = i.n();
    let (Some(lo), Some(hi)) = (i.indeg(), i.max_degree()) else {
        return Ok(i.clone());
    };
    let mut gens = Vec::new();
    let mut h = quotient_value(i, lo)?;
    for j in lo..lo + DEGREE_STEPS {
        let size = (class_size(n, j)? - h) as usize;
        gens.extend(enumerate_degree(n, j, false)?.into_iter().take(size));
        let next = quotient_value(i, j + 1)?;
        if j >= hi && j >= 1 && next == op_upper(h, j)? {
            return MonomialIdeal::new(n, gens);
        }
        h = next;
    }
    Err(Error::Scale(format!("lex ideal of {i} not stable within {DEGREE_STEPS} degrees")))
}

/// `dim_k I_{d+1}` and the least value any ideal with `dim_k I_d` can have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GotzmannGrowth {
    pub d: u32,
    pub actual: u128,
    pub least: u128,
}

impl GotzmannGrowth {
    pub fn is_gotzmann(&self) -> bool {
        self.actual == self.least
    }
}

pub fn gotzmann_growth(i: &MonomialIdeal) -> Result<GotzmannGrowth> {
    let d = match (i.indeg(), i.max_degree()) {
        (Some(a), Some(b)) if a == b => a,
        (None, _) => return Err(Error::Parameter("the zero ideal has no generator degree".to_string())),
        _ => return Err(Error::Parameter(format!("{i} has mixed generator degrees; use is_gotzmann"))),
    };
    if d == 0 {
        return Ok(GotzmannGrowth { d, actual: 1, least: 1 });
    }
    let least = class_size(i.n(), d + 1)? - op_upper(quotient_value(i, d)?, d)?;
    Ok(GotzmannGrowth { d, actual: i.hilbert_value(d + 1)?, least })
}

/// For `I` generated in one degree `d`: `m I` has as few generators as the
/// lex ideal allows.  By persistence one step decides it.
pub fn is_gotzmann_one_degree(i: &MonomialIdeal) -> Result<bool> {
    Ok(gotzmann_growth(i)?.is_gotzmann())
}

/// Every `I_<j>` over the generator degrees is Gotzmann; degrees in between
/// and above are `m`-multiples and inherit it.
pub fn is_gotzmann(i: &MonomialIdeal) -> Result<bool> {
    let mut degrees: Vec<u32> = i.gens().iter().map(Monomial::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for j in degrees {
        if !is_gotzmann_one_degree(&i.component(j)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ends_of(u: &Monomial, v: &Monomial) -> Result<(usize, u32)> {
    if u.n() != v.n() {
        return Err(Error::Dimension { expected: u.n(), found: v.n() });
    }
    if u.degree() != v.degree() {
        return Err(Error::Parameter(format!("ends {u} and {v} have different degrees")));
    }
    if u < v {
        return Err(Error::Order(format!("{u} <lex {v}")));
    }
    Ok((u.n(), u.degree()))
}

pub fn lexseg_ideal(u: &Monomial, v: &Monomial) -> Result<MonomialIdeal> {
    let seg = build(Some(u), Some(v), Flavor::General)?;
    MonomialIdeal::new(seg.n, seg.members)
}

/// The numbers behind the closed Gotzmann test for completely lexsegments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletelyGotzmann {
    /// `|Mon_d \ L^i(u)|`.
    pub a: u128,
    /// Exponent of `x_n` in `v`.
    pub j: u32,
    /// `C(n+d-1, d) - (j+1)`.
    pub bound: u128,
    pub gotzmann: bool,
    pub note: Option<String>,
}

/// Completely `L(u, v)` with `x_1 | u`: Gotzmann iff `a >= C(n+d-1, d) - (j+1)`.
pub fn gotzmann_completely_lexseg(u: &Monomial, v: &Monomial) -> Result<CompletelyGotzmann> {
    let (n, d) = ends_of(u, v)?;
    if u.exp(1) == 0 {
        return Err(Error::Domain(format!("x1 does not divide {u}")));
    }
    if !is_completely(u, v, Flavor::General)? {
        return Err(Error::Domain(format!("L({u}, {v}) is not completely")));
    }
    let total = class_size(n, d)?;
    let above = enumerate_degree(n, d, false)?.iter().filter(|w| *w > u).count() as u128;
    let a = total - above - 1;
    let j = v.exp(n);
    if above == 0 {
        let note = Some(format!("L({u}, {v}) is initial, hence Gotzmann"));
        return Ok(CompletelyGotzmann { a, j, bound: 0, gotzmann: true, note });
    }
    let bound = total.saturating_sub(j as u128 + 1);
    Ok(CompletelyGotzmann { a, j, bound, gotzmann: a >= bound, note: None })
}

/// `I = m (x_l, .., x_{l+p})` with `p >= 1`; returns `(m, l, p)`.
pub fn monomial_times_consecutive(i: &MonomialIdeal) -> Option<(Monomial, usize, usize)> {
    let (first, rest) = i.gens().split_first()?;
    let m = rest.iter().fold(first.clone(), |g, w| g.gcd(w));
    let mut vars = Vec::with_capacity(i.mu());
    for g in i.gens() {
        let q = g.div(&m)?;
        if q.degree() != 1 {
            return None;
        }
        vars.push(q.min_var()?);
    }
    vars.sort_unstable();
    let l = vars[0];
    let consecutive = vars.iter().enumerate().all(|(k, &x)| x == l + k);
    (consecutive && vars.len() >= 2).then(|| (m, l, vars.len() - 1))
}

/// Lexsegment ideals that are not completely are Gotzmann exactly when they
/// are a monomial times a run of consecutive variables.
pub fn gotzmann_noncomplete_lexseg(u: &Monomial, v: &Monomial) -> Result<bool> {
    ends_of(u, v)?;
    if is_completely(u, v, Flavor::General)? {
        return Err(Error::Domain(format!("L({u}, {v}) is completely")));
    }
    Ok(monomial_times_consecutive(&lexseg_ideal(u, v)?).is_some())
}

/// Drops the variables before the first one of `u` and factors `x_1` out
/// of both ends while it divides `v`.  Neither step changes whether the
/// ideal has a linear resolution.
fn reduce_ends(u: &Monomial, v: &Monomial) -> Result<(Monomial, Monomial)> {
    let (mut u, mut v) = (u.clone(), v.clone());
    loop {
        let t = u.min_var().unwrap_or(1);
        if t > 1 {
            u = Monomial::new(u.exps()[t - 1..].to_vec())?;
            v = Monomial::new(v.exps()[t - 1..].to_vec())?;
        }
        match (u.div_var(1), v.div_var(1)) {
            (Some(a), Some(b)) if !a.is_one() => (u, v) = (a, b),
            _ => return Ok((u, v)),
        }
    }
}

/// Linear resolution of `(L(u, v))` from the ends alone.
pub fn adh_linear_resolution(u: &Monomial, v: &Monomial) -> Result<bool> {
    let (_, d) = ends_of(u, v)?;
    if u == v || d <= 1 {
        return Ok(true);
    }
    let (u, v) = reduce_ends(u, v)?;
    let (n, d) = (u.n(), u.degree());
    if u == v || n == 1 || d <= 1 {
        return Ok(true);
    }
    let (a1, b1) = (u.exp(1), v.exp(1));
    if is_completely(&u, &v, Flavor::General)? {
        let p = a1;
        if p > 0 && u.exp(2) == d - p && v.exp(n) == d - p && (p == d || n > 1) {
            return Ok(true);
        }
        if b1 + 1 < a1 {
            return Ok(true);
        }
        if b1 + 1 == a1 {
            // the greatest w below v; a final segment has none and is stable
            let class = enumerate_degree(n, d, false)?;
            let Some(w) = class.into_iter().find(|w| *w < v) else {
                return Ok(true);
            };
            let top = w.max_var().expect("positive degree");
            return Ok(w.div_var(top).expect("max var divides").mul_var(1) <= u);
        }
        return Ok(false);
    }
    // v = x_l x_n^{d-1}, 2 <= l < n, and u = x_1 times variables past x_l
    let l = v.min_var().expect("positive degree");
    let v_form = l >= 2 && l < n && v.exp(l) == 1 && v.exp(n) == d - 1;
    let u_form = a1 == 1 && (2..=l).all(|k| u.exp(k) == 0);
    Ok(v_form && u_form)
}

/// `depth(S/(L(u, v))) = 0` iff `x_n u / x_1 >= v`, for `x_1 | u`, `x_1 ∤ v`.
pub fn depth_zero_lexseg(u: &Monomial, v: &Monomial) -> Result<bool> {
    let (n, _) = ends_of(u, v)?;
    let Some(w) = u.div_var(1) else {
        return Err(Error::Domain(format!("x1 does not divide {u}")));
    };
    if v.exp(1) > 0 {
        return Err(Error::Domain(format!("x1 divides {v}")));
    }
    Ok(w.mul_var(n) >= *v)
}

/// `I_j` spanned by `L(x_1^{j-d} u, v x_n^{j-d})` for every `j >= d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentwiseLexSpec {
    pub n: usize,
    pub d: u32,
    pub u: Monomial,
    pub v: Monomial,
}

impl ComponentwiseLexSpec {
    pub fn new(u: Monomial, v: Monomial) -> Result<ComponentwiseLexSpec> {
        let (n, d) = ends_of(&u, &v)?;
        if u.exp(1) == 0 {
            return Err(Error::Domain(format!("x1 does not divide {u}")));
        }
        let spec = ComponentwiseLexSpec { n, d, u, v };
        spec.ideal()?;
        Ok(spec)
    }

    /// Ends of the degree `d + k` component.
    pub fn ends(&self, k: u32) -> (Monomial, Monomial) {
        (self.u.pow_var(1, k), self.v.pow_var(self.n, k))
    }

    fn members(&self, k: u32) -> Result<Vec<Monomial>> {
        let (a, b) = self.ends(k);
        Ok(build(Some(&a), Some(&b), Flavor::General)?.members)
    }

    /// Generators degree by degree; every shadow must stay inside the next
    /// component, and once a component is completely and its shadow is the
    /// next one nothing new appears.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let mut gens = self.members(0)?;
        let mut cur = gens.clone();
        for k in 0..DEGREE_STEPS {
            let shad = shadow(&cur, Flavor::General)?;
            let next = self.members(k + 1)?;
            if let Some(w) = shad.iter().find(|w| next.binary_search_by(|x| (*w).cmp(x)).is_err()) {
                return Err(Error::Domain(format!("{w} lies in m I_{} but outside the next component", self.d + k)));
            }
            let (a, b) = self.ends(k);
            if shad.len() == next.len() && is_completely(&a, &b, Flavor::General)? {
                return MonomialIdeal::new(self.n, gens);
            }
            gens.extend(next.iter().filter(|w| shad.binary_search_by(|x| (*w).cmp(x)).is_err()).cloned());
            cur = next;
        }
        Err(Error::Scale(format!("components of {self:?} not stable within {DEGREE_STEPS} degrees")))
    }

    /// Recognizes a componentwise lexsegment ideal.  The lowest component
    /// fixes `u` and `v`; every later one is compared until the ideal has no
    /// generators left and the component is completely.
    pub fn of_ideal(i: &MonomialIdeal) -> Result<ComponentwiseLexSpec> {
        let (Some(d), Some(hi)) = (i.indeg(), i.max_degree()) else {
            return Err(Error::Domain("the zero ideal".to_string()));
        };
        let low = i.degree_part(d)?;
        let not_cwlex = |why: String| Error::Domain(format!("{i} is not componentwise lexsegment: {why}"));
        if !crate::lexsegments::is_lexsegment(&low, Flavor::General)? {
            return Err(not_cwlex(format!("degree {d} is not a lexsegment")));
        }
        let u = low[0].clone();
        let v = low[low.len() - 1].clone();
        if u.exp(1) == 0 {
            return Err(Error::Domain(format!("x1 does not divide {u}; drop the unused variables first")));
        }
        let spec = ComponentwiseLexSpec { n: i.n(), d, u, v };
        for k in 1..DEGREE_STEPS {
            let part = i.degree_part(d + k)?;
            if part != spec.members(k)? {
                return Err(not_cwlex(format!("degree {} is not L{:?}", d + k, spec.ends(k))));
            }
            let (a, b) = spec.ends(k);
            if d + k >= hi && is_completely(&a, &b, Flavor::General)? {
                return Ok(spec);
            }
        }
        Err(Error::Scale(format!("components of {i} not stable within {DEGREE_STEPS} degrees")))
    }
}

/// The four properties that coincide on componentwise lexsegment ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CwlexEquivalences {
    pub cwl: bool,
    pub lowest_linear_res: bool,
    pub lowest_linear_quot: Verdict,
    pub cwl_quotients: Verdict,
}

impl CwlexEquivalences {
    /// Every decided flag has the same value.
    pub fn agree(&self) -> bool {
        let b = self.cwl;
        let fits = |v: Verdict| v == Verdict::Unknown || (v == Verdict::Yes) == b;
        self.lowest_linear_res == b && fits(self.lowest_linear_quot) && fits(self.cwl_quotients)
    }
}

/// Each property from its own oracle; a disagreement is an error.
pub fn cwlex_equivalences(spec: &ComponentwiseLexSpec, p: u64) -> Result<CwlexEquivalences> {
    let i = spec.ideal()?;
    let low = i.component(spec.d)?;
    let lq = match has_linear_quotients(&low, LINQUOT_LIMIT) {
        crate::ideal::LinearQuotients::Yes(_) => Verdict::Yes,
        crate::ideal::LinearQuotients::No => Verdict::No,
        crate::ideal::LinearQuotients::Unknown => Verdict::Unknown,
    };
    let e = CwlexEquivalences {
        cwl: is_componentwise_linear(&i, p)?,
        lowest_linear_res: has_linear_resolution(&low, p)?,
        lowest_linear_quot: lq,
        cwl_quotients: has_componentwise_linear_quotients(&i, LINQUOT_LIMIT)?,
    };
    if !e.agree() {
        return Err(Error::Disagreement(format!("{i}: {e:?}")));
    }
    Ok(e)
}

/// Why the Taylor resolution of `I` is or is not minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorMinimality {
    pub minimal: bool,
    /// A generator dividing the lcm of the others; removing it from the
    /// full set leaves the lcm unchanged.
    pub witness: Option<Monomial>,
    /// `max{m(u) : u in G(I)}` with `m(u)` the largest variable index in `u`.
    pub max_m: usize,
    /// For componentwise linear `I`: `max_m == |G(I)|`, and Gotzmann with
    /// `|G(I)| <= n`.
    pub cwl_criteria: Option<(bool, bool)>,
}

/// `lcm(T) = lcm(T \ {s})` for some `T` iff the generator `s` divides the
/// lcm of all the others, so one pass over the generators decides it.
pub fn taylor_minimality(i: &MonomialIdeal, p: u64) -> Result<TaylorMinimality> {
    let gens = i.gens();
    if gens.len() > TAYLOR_CAP {
        return Err(Error::Scale(format!("{} generators exceed the Taylor cap of {TAYLOR_CAP}", gens.len())));
    }
    let mut witness = None;
    for (k, g) in gens.iter().enumerate() {
        let others = gens.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, w)| w);
        if let Some(l) = others.cloned().reduce(|a, b| a.lcm(&b)) {
            if g.divides(&l) {
                witness = Some(g.clone());
                break;
            }
        }
    }
    let max_m = gens.iter().filter_map(Monomial::max_var).max().unwrap_or(0);
    let cwl_criteria = if is_componentwise_linear(i, p)? {
        Some((max_m == gens.len(), is_gotzmann(i)? && gens.len() <= i.n()))
    } else {
        None
    };
    Ok(TaylorMinimality { minimal: witness.is_none(), witness, max_m, cwl_criteria })
}

/// `m (x_{i_1}, .., x_{i_l})`, the shape with a minimal Taylor resolution
/// among ideals with a linear resolution.
pub fn is_monomial_times_prime(i: &MonomialIdeal) -> bool {
    let Some((first, rest)) = i.gens().split_first() else {
        return false;
    };
    let m = rest.iter().fold(first.clone(), |g, w| g.gcd(w));
    i.gens().iter().all(|g| g.div(&m).is_some_and(|q| q.degree() == 1))
}
