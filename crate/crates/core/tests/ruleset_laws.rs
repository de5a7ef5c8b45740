mod oracle;

use std::collections::HashMap;

use numbergate::properties::{hcr_closure, ClosureLimits};
use numbergate::rulesets::*;
use numbergate::{Engine, GameId, Outcome};
use oracle::{hackenbush_value, Forest, Q};

fn chomp_3x3_colorings() -> Vec<String> {
    (0u32..256)
        .map(|bits| {
            let c: Vec<char> = (0..8).map(|i| if bits >> i & 1 == 1 { 'B' } else { 'G' }).collect();
            format!(
                "{}{}{}/{}{}{}/{}{}",
                c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]
            )
        })
        .collect()
}

fn hackenbush_strings(max_len: u32) -> Vec<String> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for bits in 0..(1u32 << len) {
            out.push((0..len).map(|i| if bits >> i & 1 == 1 { 'b' } else { 'r' }).collect());
        }
    }
    out
}

fn round_trips<R: Ruleset>(r: &R, seeds: &[&str]) -> usize {
    let seeds: Vec<R::Position> = seeds.iter().map(|s| r.parse_position(s).unwrap()).collect();
    let all = hcr_closure(r, &seeds, ClosureLimits::default()).unwrap();
    for p in &all {
        let text = r.render_position(p);
        assert_eq!(&r.parse_position(&text).unwrap(), p, "{} `{text}`", r.name());
        assert_eq!(r.render_position(&r.parse_position(&text).unwrap()), text);
    }
    all.len()
}

#[test]
fn positions_round_trip() {
    assert!(round_trips(&Divisors, &["24,18", "12,7"]) > 10);
    assert!(round_trips(&Turtles, &["UDUDUDUD", "DDUU"]) > 10);
    let colorings = chomp_3x3_colorings();
    let refs: Vec<&str> = colorings.iter().map(String::as_str).collect();
    assert!(round_trips(&Chomp, &refs) > 256);
    assert!(round_trips(&Cutcake, &["4x5", "3x3+2x5"]) > 10);
    assert!(round_trips(&Hackenbush, &["bRrBrbbr"]) == 9);
    assert!(round_trips(&Subtraction, &["n=12;L=1,3;R=2,5"]) == 13);
}

#[test]
fn position_text_is_validated() {
    assert!(Divisors.parse_position("0,3").is_err());
    assert!(Divisors.parse_position("3").is_err());
    assert!(Turtles.parse_position("UX").is_err());
    assert!(Chomp.parse_position("BBB/B").is_err());
    assert!(Chomp.parse_position("BX").is_err());
    assert!(Cutcake.parse_position("0x3").is_err());
    assert!(Cutcake.parse_position("3by3").is_err());
    assert!(Hackenbush.parse_position("bgr").is_err());
    assert!(Subtraction.parse_position("n=5;L=0;R=1").is_err());
    assert!(Subtraction.parse_position("n=5;L=1").is_err());
    assert_eq!(Hackenbush.render_position(&Hackenbush.parse_position("bRrB").unwrap()), "brrb");
}

#[test]
fn divisors_appendix_chain_is_legal() {
    let d = Divisors;
    let step = |from: &str, to: &str, left: bool| {
        let p = d.parse_position(from).unwrap();
        let q = d.parse_position(to).unwrap();
        let moves = if left { d.left_moves(&p) } else { d.right_moves(&p) };
        assert!(moves.contains(&q), "{from} -> {to}");
    };
    step("5,4", "2,4", true);
    step("2,4", "2,1", false);
    step("2,1", "1,1", true);
    let mut e = Engine::new();
    let g = to_game(&mut e, d, &d.parse_position("1,1").unwrap()).unwrap();
    assert_eq!(g, GameId::ZERO);
}

#[test]
fn cutcake_is_monotone_in_the_cut_direction() {
    let mut e = Engine::new();
    let mut games = PositionGames::new(Cutcake);
    let mut board = |e: &mut Engine, m: u8, n: u8| {
        games.to_game(e, &CutcakeSum::new(vec![(m, n)])).unwrap()
    };
    for k in 1..=5 {
        for i in 1..=5 {
            for j in 1..i {
                let (big, small) = (board(&mut e, k, i), board(&mut e, k, j));
                assert!(e.le(small, big), "{k}x{j} <= {k}x{i}");
                let (big, small) = (board(&mut e, i, k), board(&mut e, j, k));
                assert!(e.le(big, small), "{i}x{k} <= {j}x{k}");
            }
        }
    }
}

#[test]
fn cutcake_values_match_oracle() {
    let mut e = Engine::new();
    let mut f = Forest::new();
    let mut memo = HashMap::new();
    for m in 1..=3u8 {
        for n in 1..=3u8 {
            let p = CutcakeSum::new(vec![(m, n)]);
            let g = to_game(&mut e, Cutcake, &p).unwrap();
            let x = f.from_position(&Cutcake, &p, &mut memo);
            assert_eq!(e.to_number(g).unwrap().map(Q::from_dyadic), f.value(x), "{m}x{n}");
        }
    }
    let g = to_game(&mut e, Cutcake, &Cutcake.parse_position("2x2").unwrap()).unwrap();
    assert_eq!(e.outcome(g), Outcome::P);
}

#[test]
fn chomp_color_swap_negates() {
    let mut e = Engine::new();
    let colorings = chomp_3x3_colorings();
    let seeds: Vec<ChompGrid> = colorings.iter().map(|s| Chomp.parse_position(s).unwrap()).collect();
    let all = hcr_closure(&Chomp, &seeds, ClosureLimits::default()).unwrap();
    let mut games = PositionGames::new(Chomp);
    for p in &all {
        let g = games.to_game(&mut e, p).unwrap();
        let s = games.to_game(&mut e, &p.swapped_colors()).unwrap();
        let n = e.neg(g).unwrap();
        assert!(e.equal(s, n), "{}", Chomp.render_position(p));
    }
}

#[test]
fn chomp_values_match_oracle() {
    let mut e = Engine::new();
    let mut f = Forest::new();
    let mut memo = HashMap::new();
    for text in ["B", "G", "BG", "B/G", "GB/B", "BG/BG/G", "GBB/BGB/BG"] {
        let p = Chomp.parse_position(text).unwrap();
        let g = to_game(&mut e, Chomp, &p).unwrap();
        let x = f.from_position(&Chomp, &p, &mut memo);
        assert_eq!(e.to_number(g).unwrap().map(Q::from_dyadic), f.value(x), "{text}");
    }
}

#[test]
fn hackenbush_matches_sign_expansion_and_flip_negates() {
    let mut e = Engine::new();
    let mut games = PositionGames::new(Hackenbush);
    for text in hackenbush_strings(8) {
        let p = Hackenbush.parse_position(&text).unwrap();
        let g = games.to_game(&mut e, &p).unwrap();
        let blue: Vec<bool> = text.chars().map(|c| c == 'b').collect();
        let want = hackenbush_value(&blue);
        assert_eq!(e.to_number(g).unwrap().map(Q::from_dyadic), Some(want), "{text}");
        let flipped = games.to_game(&mut e, &p.flipped()).unwrap();
        let n = e.neg(g).unwrap();
        assert!(e.equal(flipped, n), "{text}");
    }
}

#[test]
fn hackenbush_oracles_agree_on_short_strings() {
    let mut f = Forest::new();
    let mut memo = HashMap::new();
    for text in hackenbush_strings(5) {
        let p = Hackenbush.parse_position(&text).unwrap();
        let x = f.from_position(&Hackenbush, &p, &mut memo);
        let blue: Vec<bool> = text.chars().map(|c| c == 'b').collect();
        assert_eq!(f.value(x), Some(hackenbush_value(&blue)), "{text}");
    }
}

#[test]
fn turtles_values_match_oracle() {
    let mut e = Engine::new();
    let mut f = Forest::new();
    let mut memo = HashMap::new();
    for len in 0..=5u32 {
        for bits in 0..(1u32 << len) {
            let text: String = (0..len).map(|i| if bits >> i & 1 == 1 { 'U' } else { 'D' }).collect();
            let p = Turtles.parse_position(&text).unwrap();
            let g = to_game(&mut e, Turtles, &p).unwrap();
            let x = f.from_position(&Turtles, &p, &mut memo);
            assert_eq!(e.to_number(g).unwrap().map(Q::from_dyadic), f.value(x), "{text}");
        }
    }
}

#[test]
fn divisors_values_match_oracle() {
    let mut e = Engine::new();
    let mut f = Forest::new();
    let mut memo = HashMap::new();
    for l in 1..=12 {
        for r in 1..=12 {
            let p = DivisorsPosition { l, r };
            let g = to_game(&mut e, Divisors, &p).unwrap();
            let x = f.from_position(&Divisors, &p, &mut memo);
            assert_eq!(e.to_number(g).unwrap().map(Q::from_dyadic), f.value(x), "{l},{r}");
        }
    }
}

#[test]
fn symmetric_subtraction_is_never_signed() {
    let mut e = Engine::new();
    for mask in 1u32..8 {
        let set: Vec<u32> = (1..=3).filter(|k| mask >> (k - 1) & 1 == 1).collect();
        for n in 0..=20 {
            let p = SubtractionPosition::new(n, &set, &set).unwrap();
            let g = to_game(&mut e, Subtraction, &p).unwrap();
            let o = e.outcome(g);
            assert!(matches!(o, Outcome::P | Outcome::N), "n={n} S={set:?}: {o}");
        }
    }
}

#[test]
fn subtraction_matches_oracle() {
    let mut e = Engine::new();
    let mut f = Forest::new();
    let mut memo = HashMap::new();
    for n in 0..=10 {
        let p = SubtractionPosition::new(n, &[1, 3], &[2]).unwrap();
        let g = to_game(&mut e, Subtraction, &p).unwrap();
        let x = f.from_position(&Subtraction, &p, &mut memo);
        assert_eq!(e.outcome(g), f.outcome(x), "n={n}");
        assert_eq!(e.to_number(g).unwrap().map(Q::from_dyadic), f.value(x), "n={n}");
    }
}
