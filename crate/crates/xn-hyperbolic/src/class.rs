//! Trace-`l` elements `γ_l(a, b, c)` of `Γ(N)` and their binary quadratic forms.

use crate::HypError;
use std::collections::{BTreeMap, HashMap};
use xn_arith::{gcd_i, is_square, Level, Matrix2};

/// Binary quadratic form `A x² + B xy + C y²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Form {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl Form {
    pub fn new(a: i128, b: i128, c: i128) -> Self {
        Form { a, b, c }
    }

    pub fn discriminant(&self) -> i128 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    pub fn neg(&self) -> Form {
        Form::new(-self.a, -self.b, -self.c)
    }

    /// `(f∘g)(x, y) = f(αx + βy, γx + δy)` for `g = [[α, β], [γ, δ]]`.
    pub fn compose(&self, g: &Matrix2) -> Form {
        let (al, be, ga, de) = (g.a, g.b, g.c, g.d);
        Form {
            a: self.a * al * al + self.b * al * ga + self.c * ga * ga,
            b: 2 * self.a * al * be + self.b * (al * de + be * ga) + 2 * self.c * ga * de,
            c: self.a * be * be + self.b * be * de + self.c * de * de,
        }
    }
}

/// A hyperbolic element `γ_l(a, b, c) = [[(l - bN)/2, -cN], [aN, (l + bN)/2]]` of `Γ̄(N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperbolicClass {
    pub level: Level,
    pub l: i128,
    pub a: i128,
    pub b: i128,
    pub c: i128,
    /// `D = b² - 4ac`, positive and non-square.
    pub disc: i128,
    pub matrix: Matrix2,
    /// `f_γ = N (a x² + b xy + c y²)`.
    pub form: Form,
}

impl HyperbolicClass {
    pub fn n(&self) -> i128 {
        self.level.get() as i128
    }

    /// `f_γ(n, -m)`, the height of the lattice point `(m, n)`.
    pub fn height(&self, m: i128, n: i128) -> i128 {
        self.form.eval(n, -m)
    }

    /// Sign `ε = ±1` with `γ ≡ ε·I mod N`.
    pub fn congruence_sign(&self) -> i128 {
        if self.matrix.is_identity_mod(self.n()) {
            1
        } else {
            -1
        }
    }
}

/// Build `γ_l(a, b, c)` after checking every defining condition.
pub fn make_class(level: Level, l: i128, a: i128, b: i128, c: i128) -> Result<HyperbolicClass, HypError> {
    let n = level.get() as i128;
    if l.abs() <= 2 {
        return Err(HypError::NotHyperbolic(l));
    }
    let l2m4 = l * l - 4;
    if l2m4 % (n * n) != 0 {
        return Err(HypError::TraceNotAdmissible { l, n: n as u64 });
    }
    if a <= 0 {
        return Err(HypError::NonPositiveLeading(a));
    }
    if gcd_i(gcd_i(a, b), c) != 1 {
        return Err(HypError::NotPrimitive { a, b, c });
    }
    let (lo, hi) = (l - b * n, l + b * n);
    if lo % 2 != 0 {
        return Err(HypError::Congruence { l, b, reason: "l - bN is odd" });
    }
    let (m11, m22) = (lo / 2, hi / 2);
    // PSL2: γ ≡ ±I mod N, the sign being fixed by l ≡ ±2 mod N
    let congruent = |e: i128| (m11 - e) % n == 0 && (m22 - e) % n == 0;
    if !(congruent(1) || congruent(-1)) {
        return Err(HypError::Congruence { l, b, reason: "(l ± bN)/2 is not ≡ ±1 mod N" });
    }
    let disc = b * b - 4 * a * c;
    if l2m4 != n * n * disc {
        return Err(HypError::DiscriminantMismatch { l, disc, n: n as u64 });
    }
    if disc <= 0 || is_square(disc) {
        return Err(HypError::SquareDiscriminant(disc));
    }
    let matrix = Matrix2::new(m11, -c * n, a * n, m22)?;
    Ok(HyperbolicClass { level, l, a, b, c, disc, matrix, form: Form::new(a * n, b * n, c * n) })
}

/// `β_l(m) = c x² + (d - a) xy - b y²` for `m = [[a, b], [c, d]]` with `|tr m| > 2`.
pub fn beta_l(m: &Matrix2) -> Result<Form, HypError> {
    let l = m.trace();
    if l.abs() <= 2 {
        return Err(HypError::NotHyperbolic(l));
    }
    Ok(Form::new(m.c, m.d - m.a, -m.b))
}

/// Inverse of [`beta_l`]: the trace-`l` matrix whose form is `f`.
pub fn beta_l_inv(f: &Form, l: i128) -> Result<Matrix2, HypError> {
    let disc = f.discriminant();
    if disc != l * l - 4 {
        return Err(HypError::FormDiscriminant { disc, expected: l * l - 4 });
    }
    // parity follows from B² ≡ l² mod 4
    Ok(Matrix2::new((l - f.b) / 2, -f.c, f.a, (l + f.b) / 2)?)
}

/// Every `γ_l(a, b, c)` with `max(|a|, |b|, |c|) <= entry_bound`, sorted by `(a, b, c)`.
pub fn enumerate_sp_l(level: Level, l: i128, entry_bound: i128) -> Vec<HyperbolicClass> {
    let n = level.get() as i128;
    if l.abs() <= 2 || (l * l - 4) % (n * n) != 0 {
        return Vec::new();
    }
    let disc = (l * l - 4) / (n * n);
    let mut out = Vec::new();
    for a in 1..=entry_bound {
        for b in -entry_bound..=entry_bound {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c.abs() > entry_bound {
                continue;
            }
            if let Ok(k) = make_class(level, l, a, b, c) {
                out.push(k);
            }
        }
    }
    out
}

/// One merged component of the bounded search.
#[derive(Debug, Clone)]
pub struct CensusClass {
    /// Least `(a, b, c)` with `a > 0` in the component.
    pub rep: HyperbolicClass,
    /// Reduced coefficients `(a, b, c)` of every form met, sorted.
    pub members: Vec<(i128, i128, i128)>,
}

/// Classes of `sp_l` under `Γ(N)` found by a bounded search.
#[derive(Debug, Clone)]
pub struct ClassCensus {
    pub entry_bound: i128,
    pub classes: Vec<CensusClass>,
    /// The search is bounded, so `classes.len()` is only a lower bound for the class number.
    pub complete: bool,
}

impl ClassCensus {
    /// Index of the class containing the reduced form `(a, b, c)`.
    pub fn class_of(&self, a: i128, b: i128, c: i128) -> Option<usize> {
        self.classes.iter().position(|k| k.members.binary_search(&(a, b, c)).is_ok())
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], i: usize, j: usize) {
    let (a, b) = (find(parent, i), find(parent, j));
    if a != b {
        parent[a.max(b)] = a.min(b);
    }
}

/// Merge the forms `N(a, b, c)` of `sp_l` with entries bounded by `entry_bound` under the
/// action of the generators `[[1, N], [0, 1]]`, `[[1, 0], [N, 1]]` of `Γ(N)` (and their inverses).
pub fn class_representatives(level: Level, l: i128, entry_bound: i128) -> ClassCensus {
    let n = level.get() as i128;
    let mut nodes: Vec<(i128, i128, i128)> = Vec::new();
    if l.abs() > 2 && (l * l - 4) % (n * n) == 0 {
        let disc = (l * l - 4) / (n * n);
        for a in (-entry_bound..=entry_bound).filter(|&a| a != 0) {
            for b in -entry_bound..=entry_bound {
                let num = b * b - disc;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if c.abs() > entry_bound || gcd_i(gcd_i(a, b), c) != 1 {
                    continue;
                }
                let lo = l - b * n;
                if lo % 2 != 0 || !((lo / 2 - 1) % n == 0 || (lo / 2 + 1) % n == 0) {
                    continue;
                }
                nodes.push((a, b, c));
            }
        }
    }
    let index: HashMap<(i128, i128, i128), usize> = nodes.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let gens = [
        Matrix2 { a: 1, b: n, c: 0, d: 1 },
        Matrix2 { a: 1, b: -n, c: 0, d: 1 },
        Matrix2 { a: 1, b: 0, c: n, d: 1 },
        Matrix2 { a: 1, b: 0, c: -n, d: 1 },
    ];
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    for (i, &(a, b, c)) in nodes.iter().enumerate() {
        for g in &gens {
            let f = Form::new(a, b, c).compose(g);
            if let Some(&j) = index.get(&(f.a, f.b, f.c)) {
                union(&mut parent, i, j);
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<(i128, i128, i128)>> = BTreeMap::new();
    for (i, &node) in nodes.iter().enumerate() {
        let r = find(&mut parent, i);
        comps.entry(r).or_default().push(node);
    }
    let mut classes = Vec::new();
    for mut members in comps.into_values() {
        members.sort();
        let rep = members.iter().filter(|k| k.0 > 0).min();
        if let Some(&(a, b, c)) = rep {
            if let Ok(rep) = make_class(level, l, a, b, c) {
                classes.push(CensusClass { rep, members });
            }
        }
    }
    classes.sort_by_key(|k| (k.rep.a, k.rep.b, k.rep.c));
    ClassCensus { entry_bound, classes, complete: false }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv() -> Level {
        Level::new(15).unwrap()
    }

    #[test]
    fn test_class_matrix() {
        let k = make_class(lv(), 227, 1, 1, -57).unwrap();
        assert_eq!(k.matrix, Matrix2 { a: 106, b: 855, c: 15, d: 121 });
        assert_eq!(k.disc, 229);
        assert_eq!(k.form, Form::new(15, 15, -855));
        assert_eq!(k.congruence_sign(), 1);
    }

    #[test]
    fn rejections_are_distinct() {
        assert!(matches!(make_class(lv(), 227, 1, 2, -57), Err(HypError::Congruence { .. })));
        assert!(matches!(make_class(lv(), 17, 1, 1, -57), Err(HypError::TraceNotAdmissible { .. })));
        assert!(matches!(make_class(lv(), 2, 1, 1, -57), Err(HypError::NotHyperbolic(2))));
        assert!(matches!(make_class(lv(), 227, -1, 1, 57), Err(HypError::NonPositiveLeading(-1))));
        assert!(matches!(make_class(lv(), 227, 2, 2, 2), Err(HypError::NotPrimitive { .. })));
        assert!(matches!(make_class(lv(), 227, 1, 1, -56), Err(HypError::DiscriminantMismatch { .. })));
    }

    #[test]
    fn beta_round_trip() {
        let m = Matrix2 { a: 106, b: 855, c: 15, d: 121 };
        let f = beta_l(&m).unwrap();
        assert_eq!(f, Form::new(15, 15, -855));
        assert_eq!(beta_l_inv(&f, 227).unwrap(), m);
        assert!(beta_l(&Matrix2::IDENTITY).is_err());
        assert!(beta_l_inv(&f, 223).is_err());
    }

    #[test]
    fn sp_l_scans() {
        let v = enumerate_sp_l(lv(), 227, 60);
        assert!(v.iter().any(|k| (k.a, k.b, k.c) == (1, 1, -57)));
        assert!(enumerate_sp_l(lv(), 17, 60).is_empty());
        let w = enumerate_sp_l(lv(), 223, 60);
        assert!(!w.is_empty());
        assert!(w.iter().all(|k| k.congruence_sign() == -1 && k.disc == 221));
    }
}
