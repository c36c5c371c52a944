use dehnforge::filling::{alg5_fill, area_upper_bound};
use dehnforge::group::is_null_homotopic;
use dehnforge::oracle::{brute_area, enumerate_null_homotopic, search_area};
use dehnforge::{Generator, Word};

fn reduced_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Generator>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in Generator::all() {
                if w.last().is_some_and(|l| l.is_inverse_of(g)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(g);
                out.push(Word::from(v.clone()));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

#[test]
fn search_reaches_the_empty_word_only_for_null_homotopic_words() {
    for w in reduced_words(5) {
        let nh = is_null_homotopic(&w);
        if nh {
            let r = brute_area(&w, 12, 4);
            assert!(r.area.is_some() && !r.exhausted, "{w}");
        }
        if w.len() <= 3 || nh {
            let r = search_area(&w, 9, 2);
            assert_eq!(r.area.is_some(), nh, "{w}");
        }
    }
}

#[test]
fn oracle_never_beats_the_filler() {
    let words = enumerate_null_homotopic(4, false).unwrap();
    assert_eq!(words.len(), 33);
    for w in words {
        let r = brute_area(&w, 12, 4);
        assert!(!r.exhausted, "{w}");
        let area = r.area.unwrap();
        let replay = r.witness.unwrap().validate().unwrap();
        assert!(replay.end.is_empty());
        assert_eq!(replay.cost, area);
        let fill = alg5_fill(&w, None).unwrap();
        assert!(area <= fill.cost, "{w}: oracle {area} above fill {}", fill.cost);
        let n = (w.len() as u64).max(4);
        assert!(area as u128 <= area_upper_bound(n, 4).unwrap());
    }
}

#[test]
fn tight_caps_are_reported() {
    // Within a length cap of 12 the cheapest path found uses six relators,
    // but over-long states reached early could still lead somewhere cheaper.
    let w = Word::parse("AbSBas").unwrap();
    let r = brute_area(&w, 12, 6);
    assert_eq!(r.area, Some(6));
    assert!(r.exhausted);
    assert_eq!(r.witness.unwrap().validate().unwrap().cost, 6);
    let r = brute_area(&w, 12, 5);
    assert_eq!(r.area, None);
    assert!(r.exhausted);
}
