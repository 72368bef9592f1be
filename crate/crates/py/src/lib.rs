use pyo3::prelude::*;

#[pymodule]
fn syzline_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
