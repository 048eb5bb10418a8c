//! Python bindings for the convex-hull family toolkit.
//!
//! The module is only compiled with the `extension-module` feature so
//! that plain workspace builds never link against libpython:
//!
//! ```text
//! cargo build -p thrackle-py --release --features extension-module
//! cp target/release/libthrackle_py.so python/thrackle_py.so
//! ```

#[cfg(feature = "extension-module")]
mod ext {
    use std::collections::BTreeMap;

    use pyo3::exceptions::PyValueError;
    use pyo3::prelude::*;
    use pyo3::types::PyAny;

    use thrackle_core::constructions::{self, ConstructionName};
    use thrackle_core::diagram;
    use thrackle_core::format;
    use thrackle_core::model::{self, VariantFlags};
    use thrackle_core::render::{render_svg as core_render_svg, RenderOptions};
    use thrackle_core::search;

    fn val_err(e: impl std::fmt::Display) -> PyErr {
        PyValueError::new_err(e.to_string())
    }

    /// A point set together with a family of convex hulls over it.
    #[pyclass(module = "thrackle_py", skip_from_py_object)]
    #[derive(Clone)]
    pub struct Instance {
        inner: model::Instance,
    }

    /// Outcome of checking the family conditions on an instance.
    #[pyclass(module = "thrackle_py", skip_from_py_object)]
    #[derive(Clone)]
    pub struct Report {
        /// True when every condition holds.
        #[pyo3(get)]
        pub valid: bool,
        /// Hull pairs where one contains the other.
        #[pyo3(get)]
        pub containment_violations: Vec<(usize, usize)>,
        /// Hull pairs with empty intersection.
        #[pyo3(get)]
        pub disjoint_violations: Vec<(usize, usize)>,
        /// Hull triples whose common intersection is not a single member point.
        #[pyo3(get)]
        pub triple_violations: Vec<(usize, usize, usize)>,
        /// Collinear point triples (when collinearity is disallowed).
        #[pyo3(get)]
        pub collinear_violations: Vec<(usize, usize, usize)>,
        rendered: String,
    }

    #[pymethods]
    impl Report {
        fn __str__(&self) -> String {
            self.rendered.clone()
        }

        fn __repr__(&self) -> String {
            format!(
                "Report(valid={}, violations={})",
                if self.valid { "True" } else { "False" },
                self.containment_violations.len()
                    + self.disjoint_violations.len()
                    + self.triple_violations.len()
                    + self.collinear_violations.len()
            )
        }

        fn __bool__(&self) -> bool {
            self.valid
        }
    }

    impl Report {
        fn from_core(report: &model::VerificationReport) -> Self {
            Report {
                valid: report.valid,
                containment_violations: report.condition1_violations.clone(),
                disjoint_violations: report.condition2_violations.clone(),
                triple_violations: report
                    .condition3_violations
                    .iter()
                    .map(|v| v.hulls)
                    .collect(),
                collinear_violations: report.general_position_violations.clone(),
                rendered: report.to_string(),
            }
        }
    }

    /// Result of an exhaustive maximum-family search.
    #[pyclass(module = "thrackle_py", skip_from_py_object)]
    #[derive(Clone)]
    pub struct SearchOutcome {
        /// Size of a largest family.
        #[pyo3(get)]
        pub max_size: usize,
        /// A witness family of that size, as index lists.
        #[pyo3(get)]
        pub witness: Vec<Vec<usize>>,
        /// Search-tree nodes visited.
        #[pyo3(get)]
        pub nodes_explored: u64,
        /// Always true: the search never terminates early.
        #[pyo3(get)]
        pub exhaustive: bool,
    }

    #[pymethods]
    impl SearchOutcome {
        fn __repr__(&self) -> String {
            format!(
                "SearchOutcome(max_size={}, nodes_explored={})",
                self.max_size, self.nodes_explored
            )
        }
    }

    impl SearchOutcome {
        fn from_core(result: &search::SearchResult) -> Self {
            SearchOutcome {
                max_size: result.max_size,
                witness: result.witness.iter().map(|h| h.indices().to_vec()).collect(),
                nodes_explored: result.nodes_explored,
                exhaustive: result.exhaustive,
            }
        }
    }

    #[pymethods]
    impl Instance {
        /// Parses the `thrackle-instance v1` text format.
        #[staticmethod]
        fn parse(text: &str) -> PyResult<Self> {
            let inner = format::parse_instance(text).map_err(val_err)?;
            Ok(Instance { inner })
        }

        /// Builds a named construction at size `n`. See `construction_names()`.
        #[staticmethod]
        fn generate(name: &str, n: usize) -> PyResult<Self> {
            let name: ConstructionName = name.parse().map_err(val_err)?;
            let inner = constructions::generate(name, n).map_err(val_err)?;
            Ok(Instance { inner })
        }

        /// Number of points.
        #[getter]
        fn n(&self) -> usize {
            self.inner.n()
        }

        /// Number of hulls in the family.
        #[getter]
        fn m(&self) -> usize {
            self.inner.m()
        }

        /// Exact point coordinates as `(x, y)` strings (`"3"` or `"1/2"`).
        fn points(&self) -> Vec<(String, String)> {
            self.inner
                .point_set()
                .points()
                .iter()
                .map(|p| (p.x.to_string(), p.y.to_string()))
                .collect()
        }

        /// Point coordinates as floats (for plotting; may round).
        fn points_float(&self) -> Vec<(f64, f64)> {
            use thrackle_core::geom::to_f64;
            self.inner
                .point_set()
                .points()
                .iter()
                .map(|p| (to_f64(&p.x), to_f64(&p.y)))
                .collect()
        }

        /// The family as sorted lists of point indices (canonical hulls).
        fn hulls(&self) -> Vec<Vec<usize>> {
            self.inner.family().iter().map(|h| h.indices().to_vec()).collect()
        }

        /// Active relaxation flags.
        fn flags(&self) -> BTreeMap<String, bool> {
            let f = self.inner.flags();
            BTreeMap::from([
                ("allow_containment".to_string(), f.allow_containment),
                ("allow_triple_interior".to_string(), f.allow_triple_interior),
                ("allow_multiset".to_string(), f.allow_multiset),
                ("allow_collinear".to_string(), f.allow_collinear),
            ])
        }

        /// Copy of the instance with different relaxation flags.
        #[pyo3(signature = (
            allow_containment = false,
            allow_triple_interior = false,
            allow_multiset = false,
            allow_collinear = false,
        ))]
        fn with_flags(
            &self,
            allow_containment: bool,
            allow_triple_interior: bool,
            allow_multiset: bool,
            allow_collinear: bool,
        ) -> Self {
            let flags = VariantFlags {
                allow_containment,
                allow_triple_interior,
                allow_multiset,
                allow_collinear,
            };
            Instance { inner: self.inner.clone().with_flags(flags) }
        }

        /// Serializes to the `thrackle-instance v1` text format.
        fn serialize(&self) -> String {
            format::serialize_instance(&self.inner)
        }

        /// Checks all family conditions under the instance's flags.
        fn verify(&self) -> Report {
            Report::from_core(&model::verify(&self.inner))
        }

        /// Renders the points and hulls to an SVG string.
        #[pyo3(signature = (labels = true, width = 800, height = 800))]
        fn render_svg(&self, labels: bool, width: u32, height: u32) -> String {
            core_render_svg(&self.inner, &RenderOptions { width, height, labels })
        }

        /// Boundary-diagram segments as `(u, v, weight)` triples.
        fn boundary_segments(&self) -> PyResult<Vec<(usize, usize, u32)>> {
            let diagram = diagram::BoundaryDiagram::build(&self.inner).map_err(val_err)?;
            Ok(diagram
                .segments()
                .iter()
                .map(|s| (s.endpoints.0, s.endpoints.1, s.weight))
                .collect())
        }

        /// Largest total weight of non-leftie boundary segments at any vertex.
        fn max_nonleftie_weight(&self) -> PyResult<u32> {
            let diagram = diagram::BoundaryDiagram::build(&self.inner).map_err(val_err)?;
            Ok((0..self.inner.n())
                .map(|p| diagram::nonleftie_weight_at(&self.inner, &diagram, p))
                .max()
                .unwrap_or(0))
        }

        /// Checks the segment-orientation lemmas; returns
        /// `(clean, both_end_nonlefties, disjoint_wedge_pairs)`.
        fn check_leftie_lemmas(&self) -> PyResult<(bool, usize, usize)> {
            let diagram = diagram::BoundaryDiagram::build(&self.inner).map_err(val_err)?;
            let rep = diagram::check_leftie_lemmas(&self.inner, &diagram);
            Ok((rep.is_clean(), rep.leftie_from_both.len(), rep.nonleftie_wedge_pairs.len()))
        }

        /// Injects each hull into a 2-subset so the segments again form a
        /// valid family, or returns None. Wants a valid convex-position
        /// instance with as many hulls as points.
        fn extract_linear(&self) -> PyResult<Option<BTreeMap<usize, (usize, usize)>>> {
            diagram::extract_underlying_linear(&self.inner).map_err(val_err)
        }

        fn __repr__(&self) -> String {
            format!("Instance(n={}, m={})", self.inner.n(), self.inner.m())
        }

        fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
            other
                .extract::<PyRef<'_, Instance>>()
                .map(|o| o.inner == self.inner)
                .unwrap_or(false)
        }
    }

    /// Parses the `thrackle-instance v1` text format.
    #[pyfunction]
    fn parse(text: &str) -> PyResult<Instance> {
        Instance::parse(text)
    }

    /// Builds a named construction at size `n`.
    #[pyfunction]
    fn generate(name: &str, n: usize) -> PyResult<Instance> {
        Instance::generate(name, n)
    }

    /// The recognized construction names.
    #[pyfunction]
    fn construction_names() -> Vec<String> {
        ConstructionName::NAMES.iter().map(|s| s.to_string()).collect()
    }

    /// Exhaustively finds a maximum family on the instance's points under
    /// its flags. `through` restricts to families whose every hull uses
    /// that point; `limit` overrides the point-count safety cap.
    #[pyfunction]
    #[pyo3(signature = (inst, through = None, limit = None))]
    fn search_max(
        inst: &Instance,
        through: Option<usize>,
        limit: Option<usize>,
    ) -> PyResult<SearchOutcome> {
        let limits = search::SearchLimits { max_points: limit };
        let points = inst.inner.point_set();
        let flags = inst.inner.flags();
        let result = match through {
            Some(p) => search::max_through_point(points, p, flags, limits),
            None => search::max_thrackle(points, flags, limits),
        }
        .map_err(val_err)?;
        Ok(SearchOutcome::from_core(&result))
    }

    #[pymodule]
    pub fn thrackle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
        m.add_class::<Instance>()?;
        m.add_class::<Report>()?;
        m.add_class::<SearchOutcome>()?;
        m.add_function(wrap_pyfunction!(parse, m)?)?;
        m.add_function(wrap_pyfunction!(generate, m)?)?;
        m.add_function(wrap_pyfunction!(construction_names, m)?)?;
        m.add_function(wrap_pyfunction!(search_max, m)?)?;
        Ok(())
    }
}
