//! Tensor files and report rendering.
//!
//! The on-disk tensor format is a JSON document with fields in canonical
//! order: `n` (dimension), an optional `metric` (n×n array of `[re, im]`
//! pairs, the identity when absent), and `R` (n⁴ nested array of `[re, im]`
//! pairs with index order `[i][j][k][l]` for the component with the second
//! and fourth slots conjugated).  Loading always validates symmetries and
//! finiteness; saving emits a deterministic byte stream so that
//! emit → load → re-emit is the identity on files.
//!
//! The bundle-input format carries a point's worth of projectivized-bundle
//! data: `n` (base dimension), `r` (bundle rank), `lambda`, `xi` (the `n`
//! twist eigenvalues), `Rg` (base curvature, same layout as `R` above), `Rh`
//! (bundle curvature indexed `[α][β][i][j]`, fiber indices first, the
//! distinguished direction at α = 0), and optional `d3`/`d4` fiber-metric
//! derivative blocks.

use std::fs;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::certify::PositivityReport;
use crate::curvature::{HermitianForm, KahlerCurvatureTensor};
use crate::error::{Error, Result};
use crate::models::BundleCurvature;
use crate::projbundle::{MixedThirdDeriv, ProjBundleInput};

/// Symmetry tolerance applied to every curvature tensor read from disk.
/// Files we emit round-trip exactly, so the slack only absorbs rounding in
/// hand-written inputs.
const LOAD_SYMMETRY_TOL: f64 = 1e-9;

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn unpair(p: [f64; 2]) -> C64 {
    C64::new(p[0], p[1])
}

type Nested4 = Vec<Vec<Vec<Vec<[f64; 2]>>>>;

fn tensor_to_nested(t: &KahlerCurvatureTensor) -> Nested4 {
    let n = t.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| (0..n).map(|l| pair(t.get(i, j, k, l))).collect())
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn nested_to_tensor(n: usize, nested: &Nested4, context: &'static str) -> Result<KahlerCurvatureTensor> {
    let mut data = Vec::with_capacity(n * n * n * n);
    if nested.len() != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: n,
            got: nested.len(),
        });
    }
    for level1 in nested {
        if level1.len() != n {
            return Err(Error::DimensionMismatch {
                context,
                expected: n,
                got: level1.len(),
            });
        }
        for level2 in level1 {
            if level2.len() != n {
                return Err(Error::DimensionMismatch {
                    context,
                    expected: n,
                    got: level2.len(),
                });
            }
            for level3 in level2 {
                if level3.len() != n {
                    return Err(Error::DimensionMismatch {
                        context,
                        expected: n,
                        got: level3.len(),
                    });
                }
                for &p in level3 {
                    data.push(unpair(p));
                }
            }
        }
    }
    let tensor = KahlerCurvatureTensor::from_raw(n, data)?;
    tensor.validate(LOAD_SYMMETRY_TOL)?;
    Ok(tensor)
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    metric: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(rename = "R")]
    r: Nested4,
}

/// A curvature tensor together with the metric it was stated in.  Whether
/// the metric field was present in the source file is preserved so that a
/// load/save round trip reproduces the bytes.
#[derive(Debug, Clone)]
pub struct TensorDocument {
    pub tensor: KahlerCurvatureTensor,
    pub metric: Option<HermitianForm>,
}

impl TensorDocument {
    pub fn new(tensor: KahlerCurvatureTensor, metric: Option<HermitianForm>) -> Self {
        Self { tensor, metric }
    }

    /// The stated metric, or the identity when the field was absent.
    pub fn metric_or_identity(&self) -> HermitianForm {
        match &self.metric {
            Some(g) => g.clone(),
            None => HermitianForm::identity(self.tensor.n()),
        }
    }

    pub fn to_json_string(&self) -> String {
        let n = self.tensor.n();
        let doc = TensorJson {
            n,
            metric: self.metric.as_ref().map(|g| {
                (0..n)
                    .map(|i| (0..n).map(|j| pair(g.matrix()[(i, j)])).collect())
                    .collect()
            }),
            r: tensor_to_nested(&self.tensor),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("tensor document serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: TensorJson = serde_json::from_str(s)?;
        let tensor = nested_to_tensor(doc.n, &doc.r, "tensor file R array")?;
        let metric = match doc.metric {
            None => None,
            Some(rows) => {
                if rows.len() != doc.n || rows.iter().any(|row| row.len() != doc.n) {
                    return Err(Error::DimensionMismatch {
                        context: "tensor file metric array",
                        expected: doc.n,
                        got: rows.len(),
                    });
                }
                let mat = DMatrix::from_fn(doc.n, doc.n, |i, j| unpair(rows[i][j]));
                Some(HermitianForm::new(mat)?)
            }
        };
        Ok(Self { tensor, metric })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json_string())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&fs::read_to_string(path)?)
    }
}

#[derive(Serialize, Deserialize)]
struct BundleInputJson {
    n: usize,
    r: usize,
    lambda: f64,
    xi: Vec<f64>,
    #[serde(rename = "Rg")]
    rg: Nested4,
    #[serde(rename = "Rh")]
    rh: Nested4,
    #[serde(skip_serializing_if = "Option::is_none")]
    d3: Option<Vec<Vec<Vec<[f64; 2]>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d4: Option<Nested4>,
}

/// Serializes projectivized-bundle point data.  `Rh` is indexed
/// `[α][β][i][j]` with fiber indices first and the distinguished direction
/// at α = 0.
pub fn bundle_input_to_json(input: &ProjBundleInput) -> String {
    let n = input.n;
    let r = input.r;
    let doc = BundleInputJson {
        n,
        r,
        lambda: input.lambda,
        xi: input.xi.clone(),
        rg: tensor_to_nested(&input.rg),
        rh: (0..r)
            .map(|al| {
                (0..r)
                    .map(|be| {
                        (0..n)
                            .map(|i| (0..n).map(|j| pair(input.rh.get(al, be, i, j))).collect())
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        d3: input.d3.as_ref().map(|t| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| pair(t.get(i, j, k))).collect())
                        .collect()
                })
                .collect()
        }),
        d4: input.d4.as_ref().map(tensor_to_nested),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("bundle input serializes");
    s.push('\n');
    s
}

pub fn bundle_input_from_json(s: &str) -> Result<ProjBundleInput> {
    let doc: BundleInputJson = serde_json::from_str(s)?;
    let n = doc.n;
    let r = doc.r;
    let rg = nested_to_tensor(n, &doc.rg, "bundle input Rg array")?;
    if doc.rh.len() != r
        || doc.rh.iter().any(|a| {
            a.len() != r || a.iter().any(|b| b.len() != n || b.iter().any(|c| c.len() != n))
        })
    {
        return Err(Error::DimensionMismatch {
            context: "bundle input Rh array",
            expected: r,
            got: doc.rh.len(),
        });
    }
    let rh_data = doc.rh;
    let rh = BundleCurvature::from_fn(r, n, |al, be, i, j| unpair(rh_data[al][be][i][j]))?;
    let d3 = match doc.d3 {
        None => None,
        Some(rows) => {
            if rows.len() != n
                || rows
                    .iter()
                    .any(|a| a.len() != n || a.iter().any(|b| b.len() != n))
            {
                return Err(Error::DimensionMismatch {
                    context: "bundle input d3 array",
                    expected: n,
                    got: rows.len(),
                });
            }
            Some(MixedThirdDeriv::from_fn(n, |i, j, k| unpair(rows[i][j][k]))?)
        }
    };
    let d4 = match doc.d4 {
        None => None,
        Some(nested) => Some(nested_to_tensor(n, &nested, "bundle input d4 array")?),
    };
    ProjBundleInput::new(doc.lambda, rg, rh, doc.xi, d3, d4)
}

pub fn load_bundle_input(path: impl AsRef<Path>) -> Result<ProjBundleInput> {
    bundle_input_from_json(&fs::read_to_string(path)?)
}

pub fn save_bundle_input(input: &ProjBundleInput, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, bundle_input_to_json(input))?;
    Ok(())
}

/// Renders a certification report as a small Markdown table with the
/// witness spelled out underneath.
pub fn report_markdown(rep: &PositivityReport) -> String {
    use crate::certify::Witness;
    let mut out = String::new();
    out.push_str("| quantity | value | verdict | margin |\n");
    out.push_str("| --- | --- | --- | --- |\n");
    let quantity = serde_json::to_value(&rep.quantity)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    let verdict = serde_json::to_value(&rep.verdict)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    out.push_str(&format!(
        "| {quantity} | {} | {verdict} | {} |\n",
        rep.value, rep.margin
    ));
    out.push_str(&format!(
        "\nmethod: seed {}, restarts {}, converged {}\n",
        rep.method.seed, rep.method.restarts, rep.method.converged
    ));
    match &rep.witness {
        Witness::Direction { components } => {
            out.push_str("\nwitness direction:\n");
            for (idx, c) in components.iter().enumerate() {
                out.push_str(&format!("  x[{idx}] = {} + {}i\n", c[0], c[1]));
            }
        }
        Witness::FrameWeights { frame, weights } => {
            out.push_str("\nwitness weights:\n");
            for (idx, w) in weights.iter().enumerate() {
                out.push_str(&format!("  a[{idx}] = {w}\n"));
            }
            out.push_str("witness frame (rows):\n");
            for (idx, row) in frame.iter().enumerate() {
                let cells: Vec<String> = row
                    .iter()
                    .map(|c| format!("{} + {}i", c[0], c[1]))
                    .collect();
                out.push_str(&format!("  u[{idx}] = [{}]\n", cells.join(", ")));
            }
        }
        Witness::None => {}
    }
    out
}
