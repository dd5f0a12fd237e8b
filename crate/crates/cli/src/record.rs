use bigamma::{Complex64, Error, EvalResult};
use serde::{Deserialize, Serialize};

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub x_re: f64,
    pub x_im: f64,
    pub z_re: f64,
    pub z_im: f64,
    pub value_re: Option<f64>,
    pub value_im: Option<f64>,
    pub err_estimate: Option<f64>,
    pub method: String,
    /// `ok`, `pole` or `error`
    pub status: String,
    pub pole_index: Option<i64>,
}

impl OutputRecord {
    pub fn new(
        x: Complex64,
        z: Complex64,
        method: &str,
        result: &Result<EvalResult, Error>,
    ) -> Self {
        let mut r = OutputRecord {
            x_re: x.re,
            x_im: x.im,
            z_re: z.re,
            z_im: z.im,
            value_re: None,
            value_im: None,
            err_estimate: None,
            method: method.to_string(),
            status: "ok".into(),
            pole_index: None,
        };
        match result {
            Ok(v) => {
                r.value_re = Some(v.value.re);
                r.value_im = Some(v.value.im);
                r.err_estimate = Some(v.err_estimate);
                r.method = v.method.as_str().to_string();
            }
            Err(Error::Pole { pole_index, .. }) => {
                r.status = "pole".into();
                r.pole_index = Some(*pole_index);
            }
            Err(_) => r.status = "error".into(),
        }
        r
    }

    /// CSV fields with 17 significant digits.
    pub fn csv_fields(&self) -> [String; 10] {
        // `+ 0.0` folds negative zero
        let f = |v: f64| format!("{:.16e}", v + 0.0);
        let o = |v: Option<f64>| v.map(f).unwrap_or_default();
        [
            f(self.x_re),
            f(self.x_im),
            f(self.z_re),
            f(self.z_im),
            o(self.value_re),
            o(self.value_im),
            o(self.err_estimate),
            self.method.clone(),
            self.status.clone(),
            self.pole_index.map(|m| m.to_string()).unwrap_or_default(),
        ]
    }

    pub const CSV_HEADER: [&'static str; 10] = [
        "x_re",
        "x_im",
        "z_re",
        "z_im",
        "value_re",
        "value_im",
        "err_estimate",
        "method",
        "status",
        "pole_index",
    ];
}
