//! Single-field corruptions of certificates that can never yield another
//! valid certificate for the same link.

use conetype::certificate::{IsolatedNode, IsolatedReason};
use conetype::{Certificate, Edge, MarkedLink, NegativeCertificate, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Far above any id used by the generators and gallery.
const FOREIGN: VertexId = VertexId(3_000_000_000);

fn foreign_edge() -> Edge {
    Edge::new(FOREIGN, VertexId(FOREIGN.0 + 1)).expect("distinct")
}

/// A corrupted copy of `cert` and the name of the corruption, or `None` when
/// the certificate has no field that can be corrupted safely.
pub fn mutate(rng: &mut ChaCha8Rng, m: &MarkedLink, cert: &Certificate) -> Option<(&'static str, Certificate)> {
    let mut out = cert.clone();
    let mut options: Vec<&'static str> = Vec::new();
    match cert {
        Certificate::Positive(p) => {
            if !p.covers.is_empty() {
                options.extend(["drop_cover", "duplicate_cover", "foreign_walk_vertex", "repeat_walk_vertex", "foreign_cover_edge"]);
            }
            if p.covers.len() >= 2 {
                options.push("retarget_cover");
            }
            if !p.isolated.is_empty() {
                options.push("drop_isolated");
            }
            if m.graph.edge_count() > 0 {
                options.push("false_isolated");
            }
        }
        Certificate::Negative(NegativeCertificate::Bridge { .. }) => {
            options.extend(["grow_component", "shrink_component", "foreign_in_component", "foreign_bridge"]);
            if m.graph.edge_count() >= 2 {
                options.push("move_bridge");
            }
        }
        Certificate::Negative(NegativeCertificate::LoneVertex { .. }) => {
            options.extend(["move_lone_vertex", "lone_as_bridge"]);
        }
    }
    let choice = *options.choose(rng)?;
    match (&mut out, choice) {
        (Certificate::Positive(p), "drop_cover") => {
            let i = rng.gen_range(0..p.covers.len());
            p.covers.remove(i);
        }
        (Certificate::Positive(p), "duplicate_cover") => {
            let c = p.covers.choose(rng).expect("non-empty").clone();
            p.covers.push(c);
        }
        (Certificate::Positive(p), "foreign_walk_vertex") => {
            let c = p.covers.choose_mut(rng).expect("non-empty");
            let vs = c.walk.vertices_mut();
            let i = rng.gen_range(0..vs.len());
            vs[i] = FOREIGN;
        }
        (Certificate::Positive(p), "repeat_walk_vertex") => {
            let c = p.covers.choose_mut(rng).expect("non-empty");
            let vs = c.walk.vertices_mut();
            let x = *vs.choose(rng).expect("walks are non-empty");
            let at = rng.gen_range(0..=vs.len());
            vs.insert(at, x);
        }
        (Certificate::Positive(p), "foreign_cover_edge") => {
            p.covers.choose_mut(rng).expect("non-empty").edge = foreign_edge();
        }
        (Certificate::Positive(p), "retarget_cover") => {
            let i = rng.gen_range(0..p.covers.len());
            let mut j = rng.gen_range(0..p.covers.len() - 1);
            if j >= i {
                j += 1;
            }
            p.covers[i].edge = p.covers[j].edge;
        }
        (Certificate::Positive(p), "drop_isolated") => {
            let i = rng.gen_range(0..p.isolated.len());
            p.isolated.remove(i);
        }
        (Certificate::Positive(p), "false_isolated") => {
            let e = m.graph.edges().collect::<Vec<_>>().choose(rng).copied().expect("has edges");
            p.isolated.push(IsolatedNode { vertex: e.lo(), reason: IsolatedReason::OtherComponents });
        }
        (Certificate::Negative(NegativeCertificate::Bridge { component, .. }), "grow_component") => {
            let outside: Vec<VertexId> = m.graph.nodes().filter(|v| !component.contains(v)).collect();
            component.insert(*outside.choose(rng).expect("the far endpoint is outside"));
        }
        (Certificate::Negative(NegativeCertificate::Bridge { component, .. }), "shrink_component") => {
            let inside: Vec<VertexId> = component.iter().copied().collect();
            component.remove(inside.choose(rng).expect("holds an endpoint"));
        }
        (Certificate::Negative(NegativeCertificate::Bridge { component, .. }), "foreign_in_component") => {
            component.insert(FOREIGN);
        }
        (Certificate::Negative(NegativeCertificate::Bridge { edge, .. }), "foreign_bridge") => {
            *edge = foreign_edge();
        }
        (Certificate::Negative(NegativeCertificate::Bridge { edge, .. }), "move_bridge") => {
            let others: Vec<Edge> = m.graph.edges().filter(|e| e != edge).collect();
            *edge = *others.choose(rng).expect("at least two edges");
        }
        (Certificate::Negative(NegativeCertificate::LoneVertex { vertex }), "move_lone_vertex") => {
            *vertex = FOREIGN;
        }
        (Certificate::Negative(n @ NegativeCertificate::LoneVertex { .. }), "lone_as_bridge") => {
            let NegativeCertificate::LoneVertex { vertex } = *n else { unreachable!() };
            *n = NegativeCertificate::Bridge {
                edge: foreign_edge(),
                component: [vertex].into(),
            };
        }
        _ => unreachable!("option list matches certificate shape"),
    }
    Some((choice, out))
}
