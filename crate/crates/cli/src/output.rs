//! Serializable records. Coefficients are always exact strings.

use num_traits::Zero;
use overq::enumerate::{enumerate_family, signed_count, Family};
use overq::{QSeries, Status, VerificationReport};
use serde::Serialize;

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct ReportRecord {
    pub id: String,
    pub order: usize,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub elapsed_ms: f64,
    #[serde(skip)]
    text: String,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        let mut rec = ReportRecord {
            id: r.id.clone(),
            order: r.order,
            status: "equal",
            exponent: None,
            lhs: None,
            rhs: None,
            message: None,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
            text: r.to_string(),
        };
        match &r.status {
            Status::Equal => {}
            Status::Mismatch { exponent, lhs, rhs } => {
                rec.status = "mismatch";
                rec.exponent = Some(*exponent);
                rec.lhs = Some(lhs.to_string());
                rec.rhs = Some(rhs.to_string());
            }
            Status::Failed(msg) => {
                rec.status = "failed";
                rec.message = Some(msg.clone());
            }
        }
        rec
    }
}

#[derive(Serialize)]
pub struct Parameters {
    pub target: String,
    pub order: usize,
}

/// Output of `verify` and `oracle`.
#[derive(Serialize)]
pub struct RunRecord {
    pub command: &'static str,
    pub parameters: Parameters,
    pub reports: Vec<ReportRecord>,
    pub exit_status: u8,
}

impl RunRecord {
    pub fn new(command: &'static str, target: &str, order: usize, reports: &[VerificationReport]) -> Self {
        let exit_status = if reports.iter().all(VerificationReport::is_equal) { 0 } else { 1 };
        RunRecord {
            command,
            parameters: Parameters {
                target: target.to_string(),
                order,
            },
            reports: reports.iter().map(ReportRecord::from).collect(),
            exit_status,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.text);
            out.push('\n');
        }
        let equal = self.reports.iter().filter(|r| r.status == "equal").count();
        out.push_str(&format!("{equal} of {} equal\n", self.reports.len()));
        out
    }
}

#[derive(Serialize)]
struct CoeffTable<'a> {
    series: &'a str,
    order: usize,
    coeffs: Vec<(usize, String)>,
}

fn nonzero(s: &QSeries) -> impl Iterator<Item = (usize, String)> + '_ {
    s.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e, c.to_string()))
}

/// `{"series": id, "order": N, "coeffs": [[exponent, "value"], ...]}`,
/// listing nonzero coefficients only.
pub fn coeffs_json(id: &str, s: &QSeries) -> String {
    let table = CoeffTable {
        series: id,
        order: s.order(),
        coeffs: nonzero(s).collect(),
    };
    let mut out = serde_json::to_string(&table).expect("records serialize");
    out.push('\n');
    out
}

pub fn coeffs_csv(s: &QSeries) -> String {
    let mut out = String::from("exponent,value\n");
    for (e, v) in nonzero(s) {
        out.push_str(&format!("{e},{v}\n"));
    }
    out
}

#[derive(Serialize)]
pub struct FamilyParameters {
    pub family: &'static str,
    pub n: u32,
}

#[derive(Serialize)]
pub struct ListRecord {
    pub command: &'static str,
    pub parameters: FamilyParameters,
    pub members: Vec<String>,
}

impl ListRecord {
    pub fn new(f: Family, n: u32, unicode: bool) -> Self {
        ListRecord {
            command: "enum",
            parameters: FamilyParameters { family: f.name(), n },
            members: enumerate_family(f, n).iter().map(|m| m.render(unicode)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        self.members.iter().map(|m| format!("{m}\n")).collect()
    }
}

#[derive(Serialize)]
pub struct CountsRecord {
    pub command: &'static str,
    pub parameters: FamilyParameters,
    pub even: u64,
    pub odd: u64,
    pub signed: i64,
}

impl CountsRecord {
    pub fn new(f: Family, n: u32) -> Self {
        let c = signed_count(f, n);
        CountsRecord {
            command: "enum",
            parameters: FamilyParameters { family: f.name(), n },
            even: c.even,
            odd: c.odd,
            signed: c.difference,
        }
    }

    pub fn to_text(&self) -> String {
        format!("({}, {}, {})\n", self.even, self.odd, self.signed)
    }
}
