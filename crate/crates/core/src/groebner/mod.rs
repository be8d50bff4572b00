//! Normal forms, Buchberger's algorithm and reduced Gröbner bases.

mod basis;
pub(crate) mod engine;
pub(crate) mod int;

pub use basis::{
    is_groebner_basis, modular_initial_ideal, normal_form, reduced_groebner_basis, GroebnerBasis,
    MonomialIdeal,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, MonomialOrder, PolyRing, Polynomial};

    fn ps(gens: &[&str]) -> Vec<Polynomial> {
        let r = PolyRing::plane();
        gens.iter()
            .map(|g| parse_polynomial(g, &r).unwrap())
            .collect()
    }

    fn gb(gens: &[&str], order: MonomialOrder) -> Vec<String> {
        reduced_groebner_basis(&ps(gens), order)
            .unwrap()
            .elements()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn normal_form_examples() {
        let g = reduced_groebner_basis(&ps(&["x*y - z"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(
            g.normal_form(&ps(&["x^2*y"])[0]).unwrap().to_string(),
            "x*z"
        );
        let h =
            reduced_groebner_basis(&ps(&["z", "x^3*y - x*y^3"]), MonomialOrder::DegRevLex).unwrap();
        assert!(h.reduces_to_zero(&ps(&["z"])[0]).unwrap());
        let k = reduced_groebner_basis(&ps(&["y"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(k.normal_form(&ps(&["x"])[0]).unwrap().to_string(), "x");
    }

    #[test]
    fn reduced_basis_examples() {
        let drl = MonomialOrder::DegRevLex;
        assert_eq!(gb(&["z", "x^3*y - x*y^3"], drl), ["z", "x^3*y - x*y^3"]);
        assert_eq!(
            gb(&["x^2 - y", "x*y - z"], drl),
            ["y^2 - x*z", "x*y - z", "x^2 - y"]
        );
        assert_eq!(gb(&["x + y", "y"], drl), ["y", "x"]);
        assert_eq!(gb(&["2*x + 4*y", "3*x"], MonomialOrder::Lex), ["y", "x"]);
    }

    #[test]
    fn checker_examples() {
        let drl = MonomialOrder::DegRevLex;
        assert!(!is_groebner_basis(&ps(&["x^2 - y", "x*y - z"]), drl).unwrap());
        assert!(is_groebner_basis(&ps(&["x", "y"]), drl).unwrap());
        let g = reduced_groebner_basis(&ps(&["x^3 - y*z", "y^2 - x*z", "x*y*z - 1"]), drl).unwrap();
        assert!(is_groebner_basis(g.elements(), drl).unwrap());
    }

    #[test]
    fn unit_ideal() {
        let g = reduced_groebner_basis(&ps(&["x - 1", "x"]), MonomialOrder::DegRevLex).unwrap();
        assert!(g.is_unit());
    }

    #[test]
    fn extension_matches_full_computation() {
        let drl = MonomialOrder::DegRevLex;
        let base = reduced_groebner_basis(&ps(&["x^2 - y*z", "y^3 - x*z^2"]), drl).unwrap();
        let ext = base.extend(&ps(&["x*y - z^2"])).unwrap();
        let full =
            reduced_groebner_basis(&ps(&["x^2 - y*z", "y^3 - x*z^2", "x*y - z^2"]), drl).unwrap();
        assert_eq!(ext, full);
    }

    #[test]
    fn modular_leads_match_rational_leads() {
        let gens = ps(&["x^2 + 3*y*z - z^2", "x*y - 5*z^2", "y^3 - x*z^2 + 7*z^3"]);
        let drl = MonomialOrder::DegRevLex;
        let q = reduced_groebner_basis(&gens, drl).unwrap().initial_ideal();
        let p = modular_initial_ideal(&gens, drl).unwrap().unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn elimination_order_basis() {
        let r = PolyRing::new(&["t", "x", "y", "z"]).unwrap();
        let gens: Vec<Polynomial> = ["t*x - y", "t*y - z"]
            .iter()
            .map(|g| parse_polynomial(g, &r).unwrap())
            .collect();
        let g = reduced_groebner_basis(&gens, MonomialOrder::Elimination(1)).unwrap();
        let free: Vec<String> = g
            .elements()
            .iter()
            .filter(|p| p.degree_in(0) == 0)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(free, ["y^2 - x*z"]);
    }
}
