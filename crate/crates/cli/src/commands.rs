use poincare_rep::lyubarskii::{lyubarskii_vectors, CouplingOrientation, LambdaParams};
use poincare_rep::verify::{check_lorentz, check_translations, check_vector_rules, RuleReport};
use poincare_rep::{
    classify_case, closed_form_vectors, direct_sum, equivalence_ratio, momentum_from_vectors, recursion_solve,
    vectors_from_coefficients, BlockChoice, CaseTag, EquivalenceRatios, Error, FreeParams, Mismatch, RadicalScalar,
    SpinSum, VectorSet,
};
use serde_json::{json, Value};

use crate::bundle::{scalar_to_json, Block, MatrixBundle, Source};
use crate::error::CliError;

/// Parses `a,b,c,d` doubled spins.
pub fn parse_spins(s: &str) -> Result<SpinSum, String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| format!("`{p}` is not a non-negative integer")))
        .collect::<Result<_, _>>()?;
    let twice: [u32; 4] = parts
        .try_into()
        .map_err(|_| String::from("expected four comma-separated doubled spins, e.g. 1,1,0,0"))?;
    if twice.iter().any(|&t| t > 64) {
        return Err(String::from("doubled spins above 64 are not supported"));
    }
    Ok(SpinSum::from_twice(twice))
}

pub fn parse_scalar(s: &str) -> Result<RadicalScalar, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn vectors(sum: SpinSum, params: &FreeParams, source: Source) -> Result<VectorSet, CliError> {
    Ok(match source {
        Source::ClosedForm => closed_form_vectors(sum, params)?,
        Source::Recursion => vectors_from_coefficients(&recursion_solve(sum, params)?),
        Source::Lyubarskii => lyubarskii_vectors(
            sum,
            &LambdaParams::new(params.t12.clone(), params.t21.clone()),
            CouplingOrientation::default(),
        )?,
    })
}

/// Builds a bundle. For the `lyubarskii` source `params` holds `λ12, λ21`.
pub fn generate(sum: SpinSum, params: &FreeParams, source: Source, block: Block) -> Result<MatrixBundle, CliError> {
    let v = vectors(sum, params, source)?;
    let vectors = match block {
        Block::Both => v,
        Block::Keep12 => momentum_from_vectors(&v, BlockChoice::Keep12),
        Block::Keep21 => momentum_from_vectors(&v, BlockChoice::Keep21),
    };
    Ok(MatrixBundle {
        source,
        block,
        generators: direct_sum(sum.first, sum.second),
        vectors,
    })
}

/// `λ12, λ21` making the Clebsch-Gordan construction equal the closed forms at `params`.
pub fn fitted_lambdas(sum: SpinSum, params: &FreeParams) -> Result<FreeParams, CliError> {
    let reference = closed_form_vectors(sum, params)?;
    let unit = lyubarskii_vectors(sum, &LambdaParams::ones(), CouplingOrientation::default())?;
    let ratios = equivalence_ratio(&reference, &unit)
        .map_err(|m| CliError::Core(Error::InconsistentRecursion(m.to_string())))?;
    Ok(FreeParams::new(
        ratios.ratio12.unwrap_or_default(),
        ratios.ratio21.unwrap_or_default(),
    ))
}

#[derive(Clone, Debug)]
pub struct RuleOutcome {
    pub report: RuleReport,
    /// `PP` rules are informational for a general vector bundle.
    pub required: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub sum: SpinSum,
    pub rules: Vec<RuleOutcome>,
}

impl VerifyReport {
    pub fn all_hold(&self) -> bool {
        self.rules.iter().all(|r| r.report.holds || !r.required)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.rules
            .iter()
            .filter(|r| r.required && !r.report.holds)
            .map(|r| r.report.rule_id.as_str())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let rules: Vec<Value> = self
            .rules
            .iter()
            .map(|r| {
                let violation = r.report.first_violation.as_ref().map(|v| {
                    json!({ "row": v.row, "col": v.col, "residual": scalar_to_json(&v.residual) })
                });
                json!({
                    "ruleId": r.report.rule_id,
                    "holds": r.report.holds,
                    "required": r.required,
                    "firstViolation": violation,
                })
            })
            .collect();
        json!({
            "spins": self.sum.twice(),
            "allHold": self.all_hold(),
            "failing": self.failing(),
            "rules": rules,
        })
    }
}

pub fn verify_bundle(bundle: &MatrixBundle) -> Result<VerifyReport, CliError> {
    let g = &bundle.generators;
    let p = &bundle.vectors;
    let mut rules: Vec<RuleOutcome> = check_lorentz(g)
        .into_iter()
        .chain(check_vector_rules(g, p)?)
        .map(|report| RuleOutcome { report, required: true })
        .collect();
    let translations_required = bundle.block != Block::Both;
    rules.extend(check_translations(p).into_iter().map(|report| RuleOutcome {
        report,
        required: translations_required,
    }));
    Ok(VerifyReport { sum: bundle.sum(), rules })
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub bound: u32,
    pub quadruples: usize,
    pub admissible: usize,
    pub bundles: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bound": self.bound,
            "quadruples": self.quadruples,
            "admissible": self.admissible,
            "bundlesChecked": self.bundles,
            "allHold": self.all_hold(),
            "failures": self.failures,
        })
    }
}

/// Every quadruple with doubled spins up to `bound`: admissible ones through
/// every source and momentum block, the rest must be rejected.
pub fn sweep(bound: u32) -> SweepReport {
    let mut report = SweepReport {
        bound,
        ..SweepReport::default()
    };
    let params = FreeParams::ones();
    for sum in SpinSum::all_up_to(bound) {
        report.quadruples += 1;
        if classify_case(sum) == CaseTag::NoSolution {
            for source in [Source::ClosedForm, Source::Recursion, Source::Lyubarskii] {
                if !matches!(vectors(sum, &params, source), Err(CliError::NoSolution(_))) {
                    report.failures.push(format!("{sum} {}: not rejected", source.name()));
                }
            }
            continue;
        }
        report.admissible += 1;
        let lambdas = match fitted_lambdas(sum, &params) {
            Ok(l) => l,
            Err(e) => {
                report.failures.push(format!("{sum}: {e}"));
                continue;
            }
        };
        for (source, p) in [
            (Source::ClosedForm, &params),
            (Source::Recursion, &params),
            (Source::Lyubarskii, &lambdas),
        ] {
            for block in [Block::Keep12, Block::Keep21] {
                report.bundles += 1;
                let outcome = generate(sum, p, source, block).and_then(|b| verify_bundle(&b));
                match outcome {
                    Ok(r) if r.all_hold() => {}
                    Ok(r) => report
                        .failures
                        .push(format!("{sum} {} {}: {}", source.name(), block.name(), r.failing().join(", "))),
                    Err(e) => report.failures.push(format!("{sum} {} {}: {e}", source.name(), block.name())),
                }
            }
        }
    }
    report
}

/// Ratios mapping the Clebsch-Gordan set at `lambdas` onto the closed forms at `params`.
pub fn equivalence(
    sum: SpinSum,
    params: &FreeParams,
    lambdas: &LambdaParams,
    orientation: CouplingOrientation,
) -> Result<Result<EquivalenceRatios, Mismatch>, CliError> {
    let reference = closed_form_vectors(sum, params)?;
    let candidate = lyubarskii_vectors(sum, lambdas, orientation)?;
    Ok(equivalence_ratio(&reference, &candidate))
}
