//! Homogeneous interleaved Reed-Solomon codes and the burst-error channel.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::poly::{vanishing_poly, Poly};

/// An `m`-interleaved RS code: `m` rows of an `[n, k]` RS code sharing the
/// evaluation points `alphas`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    field: Field,
    n: usize,
    k: usize,
    m: usize,
    alphas: Vec<u32>,
}

/// On-disk form of a [`CodeSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecFile {
    pub p: u32,
    #[serde(default = "one")]
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl CodeSpec {
    /// Code with the default evaluation points: the first `n` field elements
    /// in canonical order.
    pub fn new(field: Field, n: usize, k: usize, m: usize) -> Result<Self> {
        let alphas = (0..n as u32).collect();
        Self::with_points(field, n, k, m, alphas)
    }

    pub fn with_points(field: Field, n: usize, k: usize, m: usize, alphas: Vec<u32>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidCode("interleaving degree must be positive".into()));
        }
        if k >= n {
            return Err(Error::InvalidCode(format!("need k < n, got k={k}, n={n}")));
        }
        if n > field.order() as usize {
            return Err(Error::InvalidCode(format!(
                "length {n} exceeds the field size {}",
                field.order()
            )));
        }
        if alphas.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: alphas.len(),
            });
        }
        // validates range and distinctness
        vanishing_poly(&alphas, &field)?;
        Ok(CodeSpec {
            field,
            n,
            k,
            m,
            alphas,
        })
    }

    pub fn from_file(spec: &CodeSpecFile) -> Result<Self> {
        let field = Field::new(spec.p, spec.e, spec.modulus.as_deref())?;
        match &spec.alphas {
            Some(a) => Self::with_points(field, spec.n, spec.k, spec.m, a.clone()),
            None => Self::new(field, spec.n, spec.k, spec.m),
        }
    }

    pub fn to_file(&self) -> CodeSpecFile {
        let default_points = self.alphas.iter().enumerate().all(|(i, &a)| a == i as u32);
        CodeSpecFile {
            p: self.field.characteristic(),
            e: self.field.degree(),
            modulus: (self.field.degree() > 1).then(|| self.field.modulus().to_vec()),
            n: self.n,
            k: self.k,
            m: self.m,
            alphas: (!default_points).then(|| self.alphas.clone()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CodeSpecFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Codeword,
    Error,
    Received,
}

/// An `m x n` matrix over the code's field, stored row-major. Equality
/// ignores the role tag.
#[derive(Clone)]
pub struct WordMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
    role: Role,
}

impl fmt::Debug for WordMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.role)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl PartialEq for WordMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for WordMatrix {}

impl WordMatrix {
    pub fn zeros(rows: usize, cols: usize, role: Role) -> Self {
        WordMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            role,
        }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>, role: Role) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(WordMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
            role,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    pub fn row(&self, t: usize) -> &[u32] {
        &self.data[t * self.cols..(t + 1) * self.cols]
    }

    pub fn get(&self, t: usize, col: usize) -> u32 {
        self.data[t * self.cols + col]
    }

    pub fn set(&mut self, t: usize, col: usize, v: u32) {
        self.data[t * self.cols + col] = v;
    }

    pub fn column(&self, col: usize) -> Vec<u32> {
        (0..self.rows).map(|t| self.get(t, col)).collect()
    }

    fn zip_with(&self, rhs: &WordMatrix, role: Role, op: impl Fn(u32, u32) -> u32) -> Result<WordMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::LengthMismatch {
                expected: self.data.len(),
                got: rhs.data.len(),
            });
        }
        Ok(WordMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| op(a, b)).collect(),
            role,
        })
    }

    pub fn add(&self, rhs: &WordMatrix, f: &Field) -> Result<WordMatrix> {
        self.zip_with(rhs, Role::Received, |a, b| f.add(a, b))
    }

    /// Entrywise difference, tagged as an error pattern.
    pub fn sub(&self, rhs: &WordMatrix, f: &Field) -> Result<WordMatrix> {
        self.zip_with(rhs, Role::Error, |a, b| f.sub(a, b))
    }

    /// Columns containing at least one nonzero entry.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).any(|t| self.get(t, c) != 0))
            .collect()
    }

    /// Text form: one line per row, comma-separated canonical integers.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for t in 0..self.rows {
            let line: Vec<String> = self.row(t).iter().map(u32::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str, code: &CodeSpec, role: Role) -> Result<WordMatrix> {
        let mut rows = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let row = line
                .split(',')
                .map(|tok| {
                    let v: u64 = tok
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
                    code.field().check(v)
                })
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
        }
        let w = WordMatrix::from_rows(rows, role)?;
        w.check_shape(code)?;
        Ok(w)
    }

    pub fn check_shape(&self, code: &CodeSpec) -> Result<()> {
        if self.rows != code.m() {
            return Err(Error::LengthMismatch {
                expected: code.m(),
                got: self.rows,
            });
        }
        if self.cols != code.n() {
            return Err(Error::LengthMismatch {
                expected: code.n(),
                got: self.cols,
            });
        }
        Ok(())
    }
}

/// Number of nonzero columns.
pub fn burst_weight(w: &WordMatrix) -> usize {
    w.nonzero_columns().len()
}

/// The message polynomials `(f_1, ..., f_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MessageVector {
    pub polys: Vec<Poly>,
}

impl MessageVector {
    pub fn new(polys: Vec<Poly>) -> Self {
        MessageVector { polys }
    }

    pub fn zero(m: usize) -> Self {
        MessageVector {
            polys: vec![Poly::zero(); m],
        }
    }

    pub fn add(&self, rhs: &MessageVector, f: &Field) -> MessageVector {
        MessageVector {
            polys: self.polys.iter().zip(&rhs.polys).map(|(a, b)| a.add(b, f)).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(code: &CodeSpec, rng: &mut R) -> MessageVector {
        let q = code.field().order();
        let polys = (0..code.m())
            .map(|_| Poly::from_coeffs((0..code.k()).map(|_| rng.random_range(0..q)).collect()))
            .collect();
        MessageVector { polys }
    }
}

/// Evaluates each message polynomial at every evaluation point.
pub fn encode(msg: &MessageVector, code: &CodeSpec) -> Result<WordMatrix> {
    if msg.polys.len() != code.m() {
        return Err(Error::LengthMismatch {
            expected: code.m(),
            got: msg.polys.len(),
        });
    }
    let f = code.field();
    let mut w = WordMatrix::zeros(code.m(), code.n(), Role::Codeword);
    for (t, poly) in msg.polys.iter().enumerate() {
        if !poly.degree_below(code.k()) {
            return Err(Error::DegreeBound {
                degree: poly.degree().unwrap_or(0),
                bound: code.k(),
            });
        }
        for (c, &a) in code.alphas().iter().enumerate() {
            w.set(t, c, poly.eval(a, f));
        }
    }
    Ok(w)
}

/// Error with exactly `eps` nonzero columns.
///
/// The column set comes from a partial Fisher-Yates shuffle of `0..n`. Each
/// chosen column is then drawn uniformly from the nonzero vectors of `F_q^m`
/// by rejection: draw `m` uniform entries, retry while all are zero.
pub fn sample_error<R: Rng + ?Sized>(code: &CodeSpec, eps: usize, rng: &mut R) -> Result<WordMatrix> {
    let n = code.n();
    if eps > n {
        return Err(Error::InvalidCode(format!("error weight {eps} exceeds length {n}")));
    }
    let q = code.field().order();
    let mut positions: Vec<usize> = (0..n).collect();
    for i in 0..eps {
        let j = rng.random_range(i..n);
        positions.swap(i, j);
    }
    let mut e = WordMatrix::zeros(code.m(), n, Role::Error);
    for &col in &positions[..eps] {
        loop {
            let column: Vec<u32> = (0..code.m()).map(|_| rng.random_range(0..q)).collect();
            if column.iter().any(|&v| v != 0) {
                for (t, v) in column.into_iter().enumerate() {
                    e.set(t, col, v);
                }
                break;
            }
        }
    }
    Ok(e)
}

/// One transmission: message, codeword, error and received word.
#[derive(Clone, Debug)]
pub struct Instance {
    pub message: MessageVector,
    pub codeword: WordMatrix,
    pub error: WordMatrix,
    pub received: WordMatrix,
}

/// Draws the message first, then the error, from the same stream.
pub fn random_instance<R: Rng + ?Sized>(code: &CodeSpec, eps: usize, rng: &mut R) -> Result<Instance> {
    let message = MessageVector::random(code, rng);
    let codeword = encode(&message, code)?;
    let error = sample_error(code, eps, rng)?;
    let received = codeword.add(&error, code.field())?;
    Ok(Instance {
        message,
        codeword,
        error,
        received,
    })
}
