//! Named coframes with structure equations, and the exterior derivative
//! they determine.

use super::form::{Blade, Form};
use crate::error::{Error, Result};
use crate::scalars::ParamPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct CoframeSpec {
    generators: Vec<String>,
    t_index: usize,
    structure: Vec<Form>,
}

impl CoframeSpec {
    /// Build a coframe, rejecting structure equations with d² ≠ 0.
    pub fn new(generators: Vec<String>, t_index: usize, structure: Vec<Form>) -> Result<Self> {
        let cf = Self::unchecked(generators, t_index, structure);
        if !cf.structure[t_index].is_zero() {
            return Err(Error::NotIntegrable(cf.generators[t_index].clone()));
        }
        if let Some(bad) = cf.first_non_closed() {
            return Err(Error::NotIntegrable(cf.generators[bad].clone()));
        }
        Ok(cf)
    }

    /// Build without the integrability check, for experiments with broken
    /// structure equations.
    pub fn unchecked(generators: Vec<String>, t_index: usize, structure: Vec<Form>) -> Self {
        assert_eq!(generators.len(), structure.len());
        assert!(generators.len() <= 16 && t_index < generators.len());
        CoframeSpec {
            generators,
            t_index,
            structure,
        }
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn t_index(&self) -> usize {
        self.t_index
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(String::as_str).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// The generator called `name` as a 1-form.
    pub fn gen(&self, name: &str) -> Form {
        Form::generator(self.index_of(name).unwrap_or_else(|| panic!("no generator {name}")))
    }

    pub fn dt(&self) -> Form {
        Form::generator(self.t_index)
    }

    pub fn structure(&self, i: usize) -> &Form {
        &self.structure[i]
    }

    pub fn render(&self, x: &Form) -> String {
        x.render(&self.names())
    }

    fn first_non_closed(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let dd = ext_d(&self.structure[i], self).expect("structure forms use own generators");
            !dd.is_zero()
        })
    }

    /// Exterior derivative; see [`ext_d`].
    pub fn d(&self, x: &Form) -> Result<Form> {
        ext_d(x, self)
    }

    /// The S⁷ coframe e1..e3, f1..f3, dt with de_k = −2e_ij, df_k = −2f_ij.
    pub fn s7() -> Self {
        let names = ["e1", "e2", "e3", "f1", "f2", "f3", "dt"];
        let mut structure = vec![Form::zero(); 7];
        for k in 0..3 {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            structure[k] = Form::from_indices(&[i, j], ParamPoly::integer(-2));
            structure[k + 3] = Form::from_indices(&[i + 3, j + 3], ParamPoly::integer(-2));
        }
        Self::new(names.iter().map(|s| s.to_string()).collect(), 6, structure)
            .expect("S7 structure equations integrate")
    }

    /// The B⁷ coframe p1..p3, n1..n3, dt with dp_k = −2(p_ij + n_ij) and
    /// dn_k = −2(p_i n_j − p_j n_i).
    pub fn b7() -> Self {
        let names = ["p1", "p2", "p3", "n1", "n2", "n3", "dt"];
        let mut structure = vec![Form::zero(); 7];
        for k in 0..3 {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            structure[k] = &Form::from_indices(&[i, j], ParamPoly::integer(-2))
                + &Form::from_indices(&[i + 3, j + 3], ParamPoly::integer(-2));
            structure[k + 3] = &Form::from_indices(&[i, j + 3], ParamPoly::integer(-2))
                - &Form::from_indices(&[j, i + 3], ParamPoly::integer(-2));
        }
        Self::new(names.iter().map(|s| s.to_string()).collect(), 6, structure)
            .expect("B7 structure equations integrate")
    }
}

/// Exterior derivative as the degree-one antiderivation fixed by the
/// structure equations on generators and by f ↦ f′ dt on coefficients.
pub fn ext_d(x: &Form, cf: &CoframeSpec) -> Result<Form> {
    let dt = Blade::generator(cf.t_index);
    let mut out = Form::zero();
    for (b, c) in x.terms() {
        if let Some(g) = b.indices().find(|&i| i >= cf.dim()) {
            return Err(Error::UnknownGenerator(g));
        }
        let dc = c.deriv_t();
        if !dc.is_zero() {
            if let Some((sign, nb)) = dt.wedge(*b) {
                out.accumulate(nb, if sign < 0 { -dc } else { dc });
            }
        }
        let idx: Vec<usize> = b.indices().collect();
        for (pos, &g) in idx.iter().enumerate() {
            let dg = &cf.structure[g];
            if dg.is_zero() {
                continue;
            }
            let before = Form::from_indices(&idx[..pos], c.clone());
            let after = Form::from_indices(&idx[pos + 1..], ParamPoly::one());
            let term = before.wedge(dg).wedge(&after);
            out = if pos % 2 == 0 { &out + &term } else { &out - &term };
        }
    }
    Ok(out)
}

/// True iff d(d g) = 0 for every generator.
pub fn d_squared_check(cf: &CoframeSpec) -> bool {
    cf.first_non_closed().is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::TrigScalar;

    #[test]
    fn generator_derivatives() {
        let cf = CoframeSpec::s7();
        assert_eq!(cf.render(&cf.d(&cf.gen("e1")).unwrap()), "- 2 e2^e3");
        assert!(cf.d(&cf.dt()).unwrap().is_zero());
        // d(s1 e1) = c1 dt∧e1 − 2 s1 e23
        let x = cf.gen("e1").scale_trig(&TrigScalar::s(1));
        let expect = &cf.dt().wedge(&cf.gen("e1")).scale_trig(&TrigScalar::c(1))
            - &cf.gen("e2").wedge(&cf.gen("e3")).scale_trig(&TrigScalar::s(1).scale(&crate::scalars::AlgebraicScalar::integer(2)));
        assert_eq!(cf.d(&x).unwrap(), expect);
    }

    #[test]
    fn both_coframes_integrate() {
        assert!(d_squared_check(&CoframeSpec::s7()));
        assert!(d_squared_check(&CoframeSpec::b7()));
    }

    #[test]
    fn unknown_generator_rejected() {
        let cf = CoframeSpec::s7();
        assert!(matches!(cf.d(&Form::generator(9)), Err(Error::UnknownGenerator(9))));
    }
}
