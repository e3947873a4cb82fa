use std::fmt;

use super::coeff::{Coeff, Field};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Dense matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix<R: Coeff> {
    ctx: R::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly<R>>,
}

type ClearedRows<R> = (Vec<Vec<LaurentPoly<R>>>, i64);

impl<R: Coeff> PolyMatrix<R> {
    pub fn zeros(ctx: &R::Ctx, rows: usize, cols: usize) -> Self {
        PolyMatrix { ctx: ctx.clone(), rows, cols, data: vec![LaurentPoly::zero(ctx); rows * cols] }
    }

    pub fn from_fn(
        ctx: &R::Ctx,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly<R>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { ctx: ctx.clone(), rows, cols, data }
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<R> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly<R>) {
        self.data[i * self.cols + j] = v;
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ctx, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn without_col(&self, c: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn map_coeffs<S: Coeff>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> PolyMatrix<S> {
        PolyMatrix {
            ctx: ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p.map_coeffs(ctx, &f)).collect(),
        }
    }

    /// Exact determinant. Euclidean row reduction over fields, fraction-free
    /// elimination otherwise.
    pub fn det(&self) -> Result<LaurentPoly<R>> {
        if R::IS_FIELD {
            self.det_euclid()
        } else {
            self.det_bareiss()
        }
    }

    /// Multiply every row by a power of `t` so that all entries are
    /// ordinary polynomials. Returns the cleared rows and the total shift.
    fn cleared_rows(&self) -> Result<Option<ClearedRows<R>>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        let mut total = 0;
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let Some(lo) = row.iter().filter_map(|p| p.min_deg()).min() else {
                return Ok(None);
            };
            total += lo;
            out.push(row.iter().map(|p| p.shift(-lo)).collect());
        }
        Ok(Some((out, total)))
    }

    pub fn det_bareiss(&self) -> Result<LaurentPoly<R>> {
        let Some((mut m, shift)) = self.cleared_rows()? else {
            return Ok(LaurentPoly::zero(&self.ctx));
        };
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one(&self.ctx));
        }
        let mut negate = false;
        let mut prev = LaurentPoly::one(&self.ctx);
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(LaurentPoly::zero(&self.ctx));
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            let (top, bottom) = m.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                let a = row[k].clone();
                for j in k + 1..n {
                    let v = row[j].mul(&pivot_row[k]).sub(&a.mul(&pivot_row[j]));
                    row[j] = v.div_exact(&prev).expect("fraction-free step is exact");
                }
                row[k] = LaurentPoly::zero(&self.ctx);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        let d = if negate { d.neg() } else { d };
        Ok(d.shift(shift))
    }

    /// Unimodular row reduction; needs field coefficients so that
    /// polynomial division with remainder is available.
    pub fn det_euclid(&self) -> Result<LaurentPoly<R>> {
        assert!(R::IS_FIELD, "det_euclid needs field coefficients");
        let Some((mut m, shift)) = self.cleared_rows()? else {
            return Ok(LaurentPoly::zero(&self.ctx));
        };
        let n = self.rows;
        let mut negate = false;
        for k in 0..n {
            loop {
                let live: Vec<usize> = (k..n).filter(|&i| !m[i][k].is_zero()).collect();
                if live.is_empty() {
                    return Ok(LaurentPoly::zero(&self.ctx));
                }
                let r = *live
                    .iter()
                    .min_by_key(|&&i| {
                        let nnz = m[i][k..].iter().filter(|p| !p.is_zero()).count();
                        (m[i][k].max_deg().unwrap(), nnz, i)
                    })
                    .unwrap();
                if live.len() == 1 {
                    if r != k {
                        m.swap(r, k);
                        negate = !negate;
                    }
                    break;
                }
                let pivot_row = m[r].clone();
                let unit_pivot = pivot_row[k].max_deg() == Some(0);
                let inv = unit_pivot.then(|| pivot_row[k].lead().unwrap().inv().unwrap());
                for &i in &live {
                    if i == r {
                        continue;
                    }
                    let q = match &inv {
                        Some(c) => m[i][k].scale(c),
                        None => m[i][k].div_rem(&pivot_row[k]).0,
                    };
                    if q.is_zero() {
                        continue;
                    }
                    for j in k..n {
                        if !pivot_row[j].is_zero() {
                            m[i][j] = m[i][j].sub(&q.mul(&pivot_row[j]));
                        }
                    }
                }
            }
        }
        let mut d = LaurentPoly::one(&self.ctx);
        for (k, row) in m.iter().enumerate() {
            d = d.mul(&row[k]);
        }
        let d = if negate { d.neg() } else { d };
        Ok(d.shift(shift))
    }
}

/// Small dense matrix with constant entries, used for representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ConstMatrix<F: Field> {
    n: usize,
    data: Vec<F>,
}

impl<F: Field> ConstMatrix<F> {
    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        let mut data = vec![F::zero(ctx); n * n];
        for i in 0..n {
            data[i * n + i] = F::one(ctx);
        }
        ConstMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix must be square and nonempty".into()));
        }
        Ok(ConstMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> F::Ctx {
        self.data[0].ctx()
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let ctx = self.ctx();
        let mut data = vec![F::zero(&ctx); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = data[i * n + j].add(&a.mul(&o.data[k * n + j]));
                }
            }
        }
        ConstMatrix { n, data }
    }

    pub fn scale(&self, c: &F) -> Self {
        ConstMatrix { n: self.n, data: self.data.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn trace(&self) -> F {
        (1..self.n).fold(self.data[0].clone(), |acc, i| acc.add(&self.data[i * self.n + i]))
    }

    pub fn det(&self) -> F {
        let (_, det) = self.gauss_jordan();
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        let (inv, det) = self.gauss_jordan();
        (!det.is_zero()).then_some(inv)
    }

    fn gauss_jordan(&self) -> (Self, F) {
        let n = self.n;
        let ctx = self.ctx();
        let mut a = self.data.clone();
        let mut inv = Self::identity(&ctx, n).data;
        let mut det = F::one(&ctx);
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
                return (Self::identity(&ctx, n), F::zero(&ctx));
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                    inv.swap(p * n + j, k * n + j);
                }
                det = det.neg();
            }
            let piv = a[k * n + k].clone();
            det = det.mul(&piv);
            let pi = piv.inv().unwrap();
            for j in 0..n {
                a[k * n + j] = a[k * n + j].mul(&pi);
                inv[k * n + j] = inv[k * n + j].mul(&pi);
            }
            for i in 0..n {
                if i == k || a[i * n + k].is_zero() {
                    continue;
                }
                let f = a[i * n + k].clone();
                for j in 0..n {
                    a[i * n + j] = a[i * n + j].sub(&f.mul(&a[k * n + j]));
                    inv[i * n + j] = inv[i * n + j].sub(&f.mul(&inv[k * n + j]));
                }
            }
        }
        (ConstMatrix { n, data: inv }, det)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.ctx(), self.n)
    }

    pub fn commutes_with(&self, o: &Self) -> bool {
        self.mul(o) == o.mul(self)
    }

    /// `det(M t^k - I)`.
    pub fn char_det(&self, k: i64) -> LaurentPoly<F> {
        let ctx = self.ctx();
        let m = PolyMatrix::from_fn(&ctx, self.n, self.n, |i, j| {
            let mut e = LaurentPoly::monomial(self.get(i, j).clone(), k);
            if i == j {
                e = e.sub(&LaurentPoly::one(&ctx));
            }
            e
        });
        m.det().unwrap()
    }
}

impl<F: Field> fmt::Display for ConstMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::{Fp, Integer, Prime, Rational};

    fn zp(s: &str) -> LaurentPoly<Integer> {
        LaurentPoly::parse(&(), s).unwrap()
    }

    #[test]
    fn small_integer_det() {
        let m = PolyMatrix::from_fn(&(), 2, 2, |i, j| match (i, j) {
            (0, 0) => zp("1 - t"),
            (0, 1) => zp("t^-1"),
            (1, 0) => zp("-1"),
            _ => zp("2*t"),
        });
        assert_eq!(m.det().unwrap(), zp("t^-1 + 2*t - 2*t^2"));
        let via_q = m.map_coeffs(&(), |c| Rational::from(c)).det_euclid().unwrap();
        assert_eq!(m.det_bareiss().unwrap(), via_q.map_coeffs(&(), |c| c.to_integer().unwrap()));
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::<Integer>::zeros(&(), 2, 3);
        assert!(matches!(m.det(), Err(Error::DimensionMismatch(_))));
        assert!(PolyMatrix::<Integer>::zeros(&(), 0, 0).det().unwrap() == zp("1"));
    }

    #[test]
    fn const_inverse() {
        let p = Prime::new(7).unwrap();
        let f = |n| Fp::new(p, n);
        let x = ConstMatrix::from_rows(vec![vec![f(0), f(1)], vec![f(6), f(4)]]).unwrap();
        assert_eq!(x.det(), f(1));
        assert!(x.mul(&x.inverse().unwrap()).is_identity());
        assert_eq!(x.char_det(1).to_string(), "1 + 3*t + t^2");
    }
}
