use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use neurocode::code::{
    apply_elementary_map, cc_family, cr_family, parse_code, Code, ElementaryMapSpec,
};
use neurocode::graph::{ccg, gr_complex, grg};
use neurocode::ideal::canonical_form_oracle;
use neurocode::realize::Cover;
use neurocode::sweep::{run_suite, Suite, SweepParams, DEFAULT_SEED};
use neurocode::{canonical_form, CanonicalForm};

type Term = (Vec<usize>, Vec<usize>);

fn err(e: neurocode::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn code(text: &str) -> PyResult<Code> {
    parse_code(text).map_err(err)
}

fn bits(mask: u64) -> Vec<usize> {
    neurocode::code::neurons(mask).collect()
}

fn terms(cf: &CanonicalForm) -> Vec<Term> {
    cf.elements()
        .iter()
        .map(|e| (bits(e.plus()), bits(e.minus())))
        .collect()
}

/// Neuron count and sorted codewords of a code given as text.
#[pyfunction]
fn parse(text: &str) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let c = code(text)?;
    Ok((c.n(), c.masks().map(bits).collect()))
}

/// Canonical form as (positive neurons, negated neurons) pairs.
#[pyfunction]
#[pyo3(signature = (text, oracle = false))]
fn canonical_form_terms(text: &str, oracle: bool) -> PyResult<Vec<Term>> {
    let c = code(text)?;
    let cf = if oracle {
        canonical_form_oracle(&c).map_err(err)?
    } else {
        canonical_form(&c)
    };
    Ok(terms(&cf))
}

/// Canonical form as text, e.g. "{x1*(1-x2), x1*x3}".
#[pyfunction]
fn canonical_form_text(text: &str) -> PyResult<String> {
    Ok(canonical_form(&code(text)?).to_string())
}

/// Edges of the codeword containment graph, as pairs of neuron lists.
#[pyfunction]
fn ccg_edges(text: &str) -> PyResult<Vec<(Vec<usize>, Vec<usize>)>> {
    let g = ccg(&code(text)?);
    Ok(g.edges()
        .into_iter()
        .map(|(u, v)| (u.neurons(), v.neurons()))
        .collect())
}

/// Edges of the general relationship graph of a canonical form.
#[pyfunction]
#[pyo3(signature = (cf, n = None))]
fn grg_edges(cf: &str, n: Option<usize>) -> PyResult<Vec<(usize, usize)>> {
    let cf = CanonicalForm::parse(cf, n).map_err(err)?;
    Ok(grg(&cf).edges())
}

/// Facets of the general relationship complex of a canonical form.
#[pyfunction]
#[pyo3(signature = (cf, n = None))]
fn gr_facets(cf: &str, n: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
    let cf = CanonicalForm::parse(cf, n).map_err(err)?;
    Ok(gr_complex(&cf)
        .facets()
        .iter()
        .map(|f| f.neurons())
        .collect())
}

/// The code C_m ("cc") or CR_k ("cr") as text.
#[pyfunction]
fn family(kind: &str, size: usize) -> PyResult<String> {
    let c = match kind {
        "cc" => cc_family(size),
        "cr" => cr_family(size),
        _ => return Err(PyValueError::new_err(format!("unknown family {kind:?}"))),
    };
    Ok(c.map_err(err)?.to_text())
}

/// Image of an elementary map: permute (list of new labels), add_on,
/// add_off, duplicate (neuron), delete (neuron). Returns (image, morphism).
#[pyfunction]
#[pyo3(signature = (text, kind, neuron = None, labels = None))]
fn elementary_map(
    text: &str,
    kind: &str,
    neuron: Option<usize>,
    labels: Option<Vec<usize>>,
) -> PyResult<(String, bool)> {
    let need =
        |v: Option<usize>| v.ok_or_else(|| PyValueError::new_err(format!("{kind} needs a neuron")));
    let spec = match kind {
        "permute" => ElementaryMapSpec::Permutation(
            labels.ok_or_else(|| PyValueError::new_err("permute needs labels"))?,
        ),
        "add_on" => ElementaryMapSpec::AddTrivialOn,
        "add_off" => ElementaryMapSpec::AddTrivialOff,
        "duplicate" => ElementaryMapSpec::Duplicate(need(neuron)?),
        "delete" => ElementaryMapSpec::Delete(need(neuron)?),
        _ => return Err(PyValueError::new_err(format!("unknown map {kind:?}"))),
    };
    let (image, f) = apply_elementary_map(&code(text)?, &spec).map_err(err)?;
    Ok((image.to_text(), f.is_morphism()))
}

/// Code realized by a cover given as JSON.
#[pyfunction]
fn realize(cover: &str) -> PyResult<String> {
    Ok(Cover::from_json(cover).map_err(err)?.code().to_text())
}

/// Runs a verification suite and returns its report as JSON.
#[pyfunction]
#[pyo3(signature = (suite, n = 3, exhaustive = false, samples = 200, seed = DEFAULT_SEED, max = 10))]
fn verify(
    suite: &str,
    n: usize,
    exhaustive: bool,
    samples: usize,
    seed: u64,
    max: usize,
) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(err)?;
    let report = run_suite(
        suite,
        &SweepParams {
            n,
            exhaustive,
            samples,
            seed,
            max,
        },
    )
    .map_err(err)?;
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

#[pymodule(name = "neurocode")]
fn neurocode_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form_terms, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form_text, m)?)?;
    m.add_function(wrap_pyfunction!(ccg_edges, m)?)?;
    m.add_function(wrap_pyfunction!(grg_edges, m)?)?;
    m.add_function(wrap_pyfunction!(gr_facets, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(elementary_map, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
