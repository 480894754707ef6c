//! Python bindings: `import numtok`.

use numtok_core::pipeline::{decode_line, encode_line};
use numtok_core::{
    decode_texts, encode, validate_texts, Error, LocaleRule, MarkerStyle, Mode, NumericLiteral, Scanner, SegmentKind,
    TstConfig, Vocabulary,
};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(numtok, NumtokError, PyException, "Raised for invalid input, configs, or token sequences.");

fn raise(py: Python<'_>, code: &str, message: String) -> PyErr {
    let err = NumtokError::new_err(message);
    if let Err(e) = err.value(py).setattr("code", code) {
        return e;
    }
    err
}

fn to_py(e: Error) -> PyErr {
    Python::attach(|py| raise(py, e.code(), e.to_string()))
}

fn locale(name: &str) -> PyResult<LocaleRule> {
    match LocaleRule::builtin(name) {
        Some(rule) => Ok(rule),
        None => LocaleRule::from_json(name).map_err(to_py),
    }
}

/// Tokenizer configuration. Keyword arguments override the defaults; a
/// group size other than 3 selects systematic markers unless a style is given.
#[pyclass(name = "Config", module = "numtok", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyConfig {
    inner: TstConfig,
}

#[pymethods]
impl PyConfig {
    #[new]
    #[pyo3(signature = (
        *, group_size=3, mode="compound", marker_style=None, max_int_levels=5, max_frac_depth=5,
        pad_leading_group=true, preserve_precision=false
    ))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        group_size: u32,
        mode: &str,
        marker_style: Option<&str>,
        max_int_levels: u32,
        max_frac_depth: u32,
        pad_leading_group: bool,
        preserve_precision: bool,
    ) -> PyResult<Self> {
        let mode: Mode = mode.parse().map_err(to_py)?;
        let marker_style = match marker_style {
            Some(s) => s.parse().map_err(to_py)?,
            None if group_size == 3 => MarkerStyle::TriadicHuman,
            None => MarkerStyle::Systematic,
        };
        let inner = TstConfig {
            group_size,
            mode,
            marker_style,
            max_int_levels,
            max_frac_depth,
            pad_leading_group,
            preserve_precision,
            ..TstConfig::default()
        };
        inner.validate().map_err(to_py)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(json: &str) -> PyResult<Self> {
        TstConfig::from_json(json).map(|inner| Self { inner }).map_err(to_py)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn group_size(&self) -> u32 {
        self.inner.group_size
    }

    #[getter]
    fn mode(&self) -> &'static str {
        self.inner.mode.as_str()
    }

    #[getter]
    fn marker_style(&self) -> &'static str {
        self.inner.marker_style.as_str()
    }

    #[getter]
    fn max_int_levels(&self) -> u32 {
        self.inner.max_int_levels
    }

    #[getter]
    fn max_frac_depth(&self) -> u32 {
        self.inner.max_frac_depth
    }

    #[getter]
    fn pad_leading_group(&self) -> bool {
        self.inner.pad_leading_group
    }

    #[getter]
    fn preserve_precision(&self) -> bool {
        self.inner.preserve_precision
    }

    fn __repr__(&self) -> String {
        format!("Config.from_json('{}')", self.inner.to_json())
    }
}

fn config_of(config: Option<&PyConfig>) -> TstConfig {
    config.map(|c| c.inner.clone()).unwrap_or_default()
}

/// Tokens for a single plain numeral such as `"-1234.5"`.
#[pyfunction]
#[pyo3(signature = (literal, config=None))]
fn encode_number(literal: &str, config: Option<&PyConfig>) -> PyResult<Vec<String>> {
    let lit = NumericLiteral::from_plain(literal).map_err(to_py)?;
    let seq = encode(&lit, &config_of(config)).map_err(to_py)?;
    Ok(seq.tokens.into_iter().map(|t| t.text).collect())
}

/// Canonical numeral and exact decimal value of one number's tokens.
#[pyfunction]
#[pyo3(signature = (tokens, config=None))]
fn decode_number(tokens: Vec<String>, config: Option<&PyConfig>) -> PyResult<(String, String)> {
    let texts: Vec<&str> = tokens.iter().map(String::as_str).collect();
    let d = decode_texts(&texts, &config_of(config)).map_err(to_py)?;
    Ok((d.literal.render('.'), d.value.to_string()))
}

/// Scans `text` and returns its token stream: words pass through and every
/// number is replaced by its tokens.
#[pyfunction]
#[pyo3(signature = (text, config=None, locale="western"))]
fn encode_text(py: Python<'_>, text: &str, config: Option<&PyConfig>, locale: &str) -> PyResult<Vec<String>> {
    let scanner = Scanner::new(self::locale(locale)?);
    let config = config_of(config);
    let line = py.detach(|| encode_line(text, &config, &scanner)).map_err(to_py)?;
    if let Some(e) = line.errors.first() {
        return Err(raise(py, e.code, e.message.clone()));
    }
    Ok(line.to_tokens_line().split_whitespace().map(String::from).collect())
}

/// Joins tokens with spaces and turns every token run back into a numeral.
#[pyfunction]
#[pyo3(signature = (tokens, config=None))]
fn decode_tokens(tokens: Vec<String>, config: Option<&PyConfig>) -> PyResult<String> {
    decode_line(&tokens.join(" "), &config_of(config), '.').map_err(to_py)
}

/// `None` for a well-formed sequence, else `(rule, token_index, message)`.
#[pyfunction]
#[pyo3(signature = (tokens, config=None))]
fn validate(tokens: Vec<String>, config: Option<&PyConfig>) -> Option<(&'static str, usize, String)> {
    let texts: Vec<&str> = tokens.iter().map(String::as_str).collect();
    let report = validate_texts(&texts, &config_of(config));
    report.violation.map(|v| (v.rule.id(), v.index, v.message))
}

/// Vocabulary rows `(text, kind, coefficient, exponent)` in id order; the
/// value fields are `None` for structural tokens.
#[pyfunction]
#[pyo3(signature = (config=None))]
#[allow(clippy::type_complexity)]
fn build_vocab(
    py: Python<'_>,
    config: Option<&PyConfig>,
) -> PyResult<Vec<(String, &'static str, Option<u64>, Option<i32>)>> {
    let config = config_of(config);
    let vocab = py.detach(|| Vocabulary::build(&config)).map_err(to_py)?;
    Ok(vocab
        .entries()
        .iter()
        .map(|e| (e.text.clone(), e.kind.as_str(), e.value.map(|v| v.coefficient), e.value.map(|v| v.exponent)))
        .collect())
}

/// Segments of `text` as `(start, end, kind, surface)` with byte offsets.
#[pyfunction]
#[pyo3(signature = (text, locale="western"))]
fn scan(text: &str, locale: &str) -> PyResult<Vec<(usize, usize, &'static str, String)>> {
    let scanner = Scanner::new(self::locale(locale)?);
    Ok(scanner
        .scan(text)
        .iter()
        .map(|s| {
            let kind = match s.kind {
                SegmentKind::Text => "text",
                SegmentKind::Number => "number",
            };
            (s.span.0, s.span.1, kind, s.text(text).to_string())
        })
        .collect())
}

#[pymodule]
fn numtok(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", numtok_core::VERSION)?;
    m.add("NumtokError", m.py().get_type::<NumtokError>())?;
    m.add_class::<PyConfig>()?;
    m.add_function(wrap_pyfunction!(encode_number, m)?)?;
    m.add_function(wrap_pyfunction!(decode_number, m)?)?;
    m.add_function(wrap_pyfunction!(encode_text, m)?)?;
    m.add_function(wrap_pyfunction!(decode_tokens, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(build_vocab, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    Ok(())
}
