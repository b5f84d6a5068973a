//! Re-checks a witness through the public API.

use crate::axioms::check_axioms;
use crate::biposet::BiPoset;
use crate::constructions::{dual_biposet, intersect_many};
use crate::error::{Error, Result};
use crate::extremal::extremal_report;
use crate::galois::{
    check_adjoint_properties, compose_galois, find_adjoint, is_galois, AdjointSide, GaloisMode, GaloisPair,
};
use crate::morphisms::{is_isomorphism, is_isotone, Mapping};

use super::claims::ClaimId;
use super::finding::{Finding, Witness};

fn valid(bp: &BiPoset) -> bool {
    check_axioms(bp.diamond()).passes()
}

fn galois(f: &Mapping, g: &Mapping, p: &BiPoset, q: &BiPoset) -> Result<bool> {
    Ok(is_galois(&GaloisPair::new(f.clone(), g.clone())?, p, q, GaloisMode::Hetero)?.holds())
}

/// Whether the witness still exhibits what the finding recorded: the
/// violation for universal claims, the example for existential ones.
pub fn replay_witness(claim: ClaimId, w: &Witness) -> Result<bool> {
    use ClaimId::*;
    let p = w.require_structure("P")?;
    Ok(match claim {
        DualityPrinciple => valid(p) && !valid(&dual_biposet(p)),
        DoubleDual => {
            let dd = dual_biposet(&dual_biposet(p));
            dd != *p || !is_isomorphism(&Mapping::identity(p.n()), p, &dd)?.holds()
        }
        UniqueGmax | UniqueGmin | UniqueLmax | UniqueLmin => {
            let Ok(bp) = p.clone().into_validated() else {
                return Ok(false);
            };
            let r = extremal_report(&bp)?;
            let vals = match claim {
                UniqueGmax => r.g_max_values,
                UniqueGmin => r.g_min_values,
                UniqueLmax => r.l_max_values,
                _ => r.l_min_values,
            };
            vals.len() > 1
        }
        PowersetValid => !valid(p),
        PowersetSelfDual => {
            let f = w.require_map("complement")?;
            !is_isomorphism(f, p, &dual_biposet(p))?.holds()
        }
        IntersectClosure => {
            let q = w.require_structure("Q")?;
            let meet = intersect_many(&[p.diamond().clone(), q.diamond().clone()])?;
            valid(p) && valid(q) && !check_axioms(&meet).passes()
        }
        IsoIffIsotone => {
            let q = w.require_structure("Q")?;
            let f = w.require_map("f")?;
            let inv = f.inverse().ok_or_else(|| Error::InvalidMapping("witness map is not a bijection".into()))?;
            let iso = is_isomorphism(f, p, q)?.holds();
            let both =
                is_isotone(f, p.diamond(), q.diamond())?.holds() && is_isotone(&inv, q.diamond(), p.diamond())?.holds();
            valid(p) && valid(q) && iso != both
        }
        GaloisCharFwd | GaloisCharBwd => {
            let q = w.require_structure("Q")?;
            let pair = GaloisPair::new(w.require_map("f")?.clone(), w.require_map("g")?.clone())?;
            let gal = is_galois(&pair, p, q, GaloisMode::Hetero)?.holds();
            let flags = check_adjoint_properties(&pair, p, q)?.all_hold();
            let broken = if claim == GaloisCharFwd { gal && !flags } else { flags && !gal };
            valid(p) && valid(q) && broken
        }
        AdjointUnique => {
            let q = w.require_structure("Q")?;
            let found = match w.map("f") {
                Some(f) => find_adjoint(f, p, q, AdjointSide::Right)?,
                None => find_adjoint(w.require_map("g")?, p, q, AdjointSide::Left)?,
            };
            valid(p) && valid(q) && found.len() > 1
        }
        GaloisAsymmetry => {
            let q = w.require_structure("Q")?;
            let (f, g) = (w.require_map("f")?, w.require_map("g")?);
            valid(p) && valid(q) && galois(f, g, p, q)? && !galois(g, f, q, p)?
        }
        GaloisCompose => {
            let q = w.require_structure("Q")?;
            let r = w.require_structure("R")?;
            let first = GaloisPair::new(w.require_map("f1")?.clone(), w.require_map("g1")?.clone())?;
            let second = GaloisPair::new(w.require_map("f2")?.clone(), w.require_map("g2")?.clone())?;
            let composite = compose_galois(&first, &second)?;
            [p, q, r].into_iter().all(valid)
                && is_galois(&first, p, q, GaloisMode::Hetero)?.holds()
                && is_galois(&second, q, r, GaloisMode::Hetero)?.holds()
                && !is_galois(&composite, p, r, GaloisMode::Hetero)?.holds()
        }
    })
}

/// Replays a finding's witness. Errors when the finding carries none.
pub fn replay(finding: &Finding) -> Result<bool> {
    let w = finding
        .witness
        .as_ref()
        .ok_or_else(|| Error::Usage(format!("finding for {} has no witness", finding.claim)))?;
    replay_witness(finding.claim, w)
}
