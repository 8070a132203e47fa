mod common;

use common::mutation::mutate;
use common::*;
use conetype::certificate::{make_negative_certificate, make_positive_certificate};
use conetype::decision::cone_surjection_property;
use conetype::{check_certificate, Certificate};

#[test]
fn makers_and_checker_agree_on_random_links() {
    let mut rng = rng(0xce47);
    let (mut positive, mut negative) = (0, 0);
    for _ in 0..1000 {
        let m = random_marked_link(&mut rng, 9);
        let failing = m.failing_edges();
        let lone = m.is_lone_free_vertex().is_some();

        let pos = make_positive_certificate(&m);
        assert_eq!(pos.is_ok(), failing.is_empty() && !lone, "{m:?}");
        if let Ok(p) = pos {
            assert_eq!(check_certificate(&m, &Certificate::Positive(p)), Ok(()), "{m:?}");
        }
        for e in m.graph.edges() {
            match make_negative_certificate(&m, e) {
                Ok(n) => {
                    assert!(failing.contains(&e));
                    assert_eq!(check_certificate(&m, &Certificate::Negative(n)), Ok(()), "{m:?}");
                }
                Err(_) => assert!(!failing.contains(&e)),
            }
        }

        let (passes, cert) = cone_surjection_property(&m);
        assert_eq!(passes, cert.is_positive());
        assert_eq!(check_certificate(&m, &cert), Ok(()));
        if passes {
            positive += 1;
        } else {
            negative += 1;
        }
    }
    assert!(positive > 100 && negative > 100, "{positive} positive, {negative} negative");
}

#[test]
fn corrupted_certificates_are_rejected() {
    let mut rng = rng(0xbad);
    let mut rejected = 0;
    while rejected < 1000 {
        let m = random_marked_link(&mut rng, 8);
        let (_, cert) = cone_surjection_property(&m);
        let Some((how, bad)) = mutate(&mut rng, &m, &cert) else { continue };
        assert_ne!(bad, cert);
        assert!(check_certificate(&m, &bad).is_err(), "{how} accepted on {m:?}: {bad:?}");
        rejected += 1;
    }
}
