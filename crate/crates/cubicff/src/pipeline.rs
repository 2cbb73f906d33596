//! The full analysis of one cubic: canonical form, ramification, genus and basis.

use crate::algebra::Fq;
use crate::error::{Error, Result};
use crate::forms::{classify, purity_test, CanonicalForm, CubicInput, GeneratorMap};
use crate::intbasis::{integral_basis, verify_basis, IntegralBasis};
use crate::ramgenus::{ramification, GenusReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldReport {
    pub fq: Fq,
    pub form: CanonicalForm,
    /// From the input generator to the generator of `form`.
    pub map: GeneratorMap,
    pub ramification: GenusReport,
    pub basis: IntegralBasis,
}

/// Classify, and send impure cubics that are purely cubic in disguise to the
/// pure form.
pub fn canonicalize(input: &CubicInput) -> Result<(CanonicalForm, GeneratorMap)> {
    let (form, map) = classify(input)?;
    if let CanonicalForm::Impure(a) = &form {
        if let Some((c, m2)) = purity_test(a) {
            return Ok((CanonicalForm::Pure(c), map.then(&m2)));
        }
    }
    Ok((form, map))
}

/// Run the whole pipeline. Constant field extensions are rejected unless
/// `allow_constant` is set; a basis that fails verification is an internal error.
pub fn analyze(input: &CubicInput, allow_constant: bool) -> Result<FieldReport> {
    let (form, map) = canonicalize(input)?;
    let ram = ramification(&form)?;
    if ram.constant && !allow_constant {
        return Err(Error::ConstantExtension);
    }
    let basis = integral_basis(&form)?;
    verify_basis(&basis, &ram)
        .map_err(|m| Error::Internal(format!("basis {basis} fails verification: {m}")))?;
    Ok(FieldReport {
        fq: input.fq.clone(),
        form,
        map,
        ramification: ram,
        basis,
    })
}
