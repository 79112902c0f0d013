//! Parsing of target and series identifiers, and running what they name.

use overq::enumerate::{oracle_compare, Family};
use overq::identities::bailey::{bailey_check, lemma_parameter, pair_by_name, verify_lemma};
use overq::identities::chain::{select, stages};
use overq::identities::classical::{classical_sides, verify_classical, ClassicalId};
use overq::identities::families::gen_family;
use overq::identities::theorems::{lhs_theorem, rhs_theorem, verify_c_corrected, verify_theorem, TheoremId};
use overq::products::{poch_finite, poch_infinite, MonomialParam};
use overq::{QSeries, VerificationReport};
use rayon::prelude::*;

const C_CORRECTED: &str = "C'-corrected";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Job {
    Theorem(TheoremId),
    CorrectedC,
    Classical(ClassicalId),
    Bailey(&'static str),
    Lemma(&'static str),
    Stage(&'static str),
}

fn pair_name(s: &str) -> Result<&'static str, String> {
    match pair_by_name(s) {
        Some(p) if p.name == "BP-D" => Ok("BP-D"),
        Some(_) => Ok("BP-B"),
        None => Err(format!("unknown Bailey pair `{s}` (expected BP-D or BP-B)")),
    }
}

pub fn parse_target(target: &str) -> Result<Vec<Job>, String> {
    let target = target.trim();
    if target == "all" {
        let mut jobs: Vec<Job> = TheoremId::ALL.into_iter().map(Job::Theorem).collect();
        jobs.push(Job::CorrectedC);
        jobs.extend(ClassicalId::ALL.into_iter().map(Job::Classical));
        for p in ["BP-D", "BP-B"] {
            jobs.push(Job::Bailey(p));
            jobs.push(Job::Lemma(p));
        }
        jobs.extend(stages().into_iter().map(|s| Job::Stage(s.id)));
        return Ok(jobs);
    }
    if target == "chain" {
        return Ok(stages().into_iter().map(|s| Job::Stage(s.id)).collect());
    }
    let (kind, rest) = target
        .split_once(':')
        .ok_or_else(|| format!("unknown target `{target}`"))?;
    match kind {
        "theorem" if rest == C_CORRECTED => Ok(vec![Job::CorrectedC]),
        "theorem" => TheoremId::parse(rest)
            .map(|id| vec![Job::Theorem(id)])
            .ok_or_else(|| format!("unknown theorem `{rest}`")),
        "classical" => ClassicalId::parse(rest)
            .map(|id| vec![Job::Classical(id)])
            .ok_or_else(|| format!("unknown classical identity `{rest}`")),
        "bailey" => Ok(vec![Job::Bailey(pair_name(rest)?)]),
        "lemma" => Ok(vec![Job::Lemma(pair_name(rest)?)]),
        "chain" => {
            let picked: Vec<Job> = select(rest).into_iter().map(|s| Job::Stage(s.id)).collect();
            if picked.is_empty() {
                Err(format!("unknown chain stage `{rest}`"))
            } else {
                Ok(picked)
            }
        }
        _ => Err(format!("unknown target kind `{kind}`")),
    }
}

fn run_job(job: &Job, order: usize, max_n: usize) -> VerificationReport {
    match job {
        Job::Theorem(id) => verify_theorem(*id, order),
        Job::CorrectedC => verify_c_corrected(order),
        Job::Classical(id) => verify_classical(*id, order),
        Job::Bailey(p) => bailey_check(&pair_by_name(p).expect("known pair"), max_n, order),
        Job::Lemma(p) => {
            let pair = pair_by_name(p).expect("known pair");
            let a = lemma_parameter(&pair).expect("named pairs have a parameter");
            verify_lemma(&pair, a, order)
        }
        Job::Stage(id) => select(id)[0].verify(order),
    }
}

/// Runs the jobs in parallel; reports come back in job order.
pub fn run_jobs(jobs: &[Job], order: usize, max_n: usize) -> Vec<VerificationReport> {
    jobs.par_iter().map(|j| run_job(j, order, max_n)).collect()
}

pub fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family `{s}` (expected F, G, A, A'', B, C or D)"))
}

pub fn parse_family_or_all(s: &str) -> Result<Vec<Family>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        Ok(Family::ALL.to_vec())
    } else {
        parse_family(s).map(|f| vec![f])
    }
}

pub fn run_oracles(families: &[Family], max_n: u32) -> Vec<VerificationReport> {
    families
        .par_iter()
        .map(|&f| oracle_compare(f, max_n, max_n as usize))
        .collect()
}

fn parse_int(s: &str, what: &str) -> Result<i64, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{what} must be an integer, got `{s}`"))
}

fn poch_series(spec: &str, order: usize) -> Result<QSeries, String> {
    let fields: Vec<&str> = spec.split(',').collect();
    let [c, e, base, n] = fields[..] else {
        return Err(format!("pochhammer spec `{spec}` must be c,e,base,n or c,e,base,inf"));
    };
    let a = MonomialParam::new(parse_int(c, "c")?, parse_int(e, "e")?);
    let base = parse_int(base, "base")?;
    if base < 1 {
        return Err("base must be positive".into());
    }
    let built = if n.trim() == "inf" {
        poch_infinite(a, base as usize, order)
    } else {
        let n = parse_int(n, "n")?;
        if n < 0 {
            return Err("n must be nonnegative".into());
        }
        poch_finite(a, base as usize, n as usize, order)
    };
    built.map_err(|e| e.to_string())
}

fn theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::parse(s).ok_or_else(|| format!("unknown theorem `{s}`"))
}

/// Builds the series named by `id` up to `order`, then dilates by `k`.
pub fn build_series(id: &str, order: usize, k: usize) -> Result<QSeries, String> {
    let (kind, rest) = id
        .trim()
        .split_once(':')
        .ok_or_else(|| format!("unknown series `{id}`"))?;
    let s = match kind {
        "gen" => gen_family(parse_family(rest)?, order),
        "lhs" => lhs_theorem(theorem(rest)?, order),
        "rhs" => rhs_theorem(theorem(rest)?, order),
        "classical" => {
            let (name, side) = rest
                .rsplit_once(':')
                .ok_or_else(|| format!("classical series `{rest}` needs a :lhs or :rhs suffix"))?;
            let cid = ClassicalId::parse(name).ok_or_else(|| format!("unknown classical identity `{name}`"))?;
            let (l, r) = classical_sides(cid, order).map_err(|e| e.to_string())?;
            match side {
                "lhs" => l,
                "rhs" => r,
                _ => return Err(format!("side must be lhs or rhs, got `{side}`")),
            }
        }
        "poch" => poch_series(rest, order)?,
        _ => return Err(format!("unknown series kind `{kind}`")),
    };
    Ok(if k == 1 { s } else { s.dilate(k) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets() {
        assert_eq!(parse_target("theorem:B'").unwrap(), vec![Job::Theorem(TheoremId::B)]);
        assert_eq!(parse_target("bailey:bp-d").unwrap(), vec![Job::Bailey("BP-D")]);
        assert_eq!(parse_target("chain:b").unwrap().len(), 8);
        assert!(parse_target("theorem:bogus").is_err());
        assert!(parse_target("nothing").is_err());
        assert!(parse_target("chain:zz").is_err());
    }

    #[test]
    fn series_ids() {
        assert!(build_series("gen:A", 10, 1).is_ok());
        assert!(build_series("classical:jacobi:rhs", 10, 1).is_ok());
        assert!(build_series("classical:jacobi", 10, 1).is_err());
        assert!(build_series("poch:1,1,1,inf", 10, 1).is_ok());
        assert!(build_series("poch:1,0,1,inf", 10, 1).is_err());
        assert!(build_series("poch:1,1", 10, 1).is_err());
    }
}
