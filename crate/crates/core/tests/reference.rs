//! Straight-line re-derivations of one iteration of every optimizer on the
//! sphere (dim 2, N = 3, 10 iterations planned), checked bit for bit against
//! the library. `print_fixtures` emits the frozen values used by the harness
//! acceptance suite.

#![allow(clippy::needless_range_loop)]

use bbo_core::kernels::{circle_intersection_area, ChaosMap, ChaosState, CirclePair};
use bbo_core::{AlgorithmId, Benchmark, BenchmarkId, Run, RunConfig};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;
const N: usize = 3;
const T: usize = 10;
const LO: f64 = -100.0;
const HI: f64 = 100.0;

struct Stream(ChaCha8Rng);

impl Stream {
    fn new(seed: u64) -> Self {
        Stream(ChaCha8Rng::seed_from_u64(seed))
    }
    fn u(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn sphere(x: &[f64; 2]) -> f64 {
    x[0] * x[0] + x[1] * x[1]
}

fn bound(v: f64) -> f64 {
    if v.is_nan() {
        0.0
    } else {
        v.clamp(LO, HI)
    }
}

#[derive(Clone, Copy, Debug)]
struct State {
    x: [[f64; 2]; N],
    f: [f64; N],
    best: [f64; 2],
    best_f: f64,
}

impl State {
    fn init(s: &mut Stream) -> Self {
        let mut x = [[0.0; 2]; N];
        for a in x.iter_mut() {
            a[0] = LO + s.u() * (HI - LO);
            a[1] = LO + s.u() * (HI - LO);
        }
        let f = [sphere(&x[0]), sphere(&x[1]), sphere(&x[2])];
        let mut b = 0;
        for i in 1..N {
            if f[i] < f[b] {
                b = i;
            }
        }
        State { x, f, best: x[b], best_f: f[b] }
    }

    fn offer(&mut self, x: [f64; 2], f: f64) {
        if f < self.best_f {
            self.best = x;
            self.best_f = f;
        }
    }
}

/// Top-3 distinct archive: (position, fitness) sorted ascending.
fn leaders_offer(l: &mut Vec<([f64; 2], f64)>, x: [f64; 2], f: f64) {
    if let Some(k) = l.iter().position(|e| e.0 == x) {
        if f < l[k].1 {
            l.remove(k);
        } else {
            return;
        }
    }
    let at = l.iter().position(|e| f < e.1).unwrap_or(l.len());
    if at < 3 {
        l.insert(at, (x, f));
        l.truncate(3);
    }
}

fn leader(l: &[([f64; 2], f64)], k: usize) -> [f64; 2] {
    l[k.min(l.len() - 1)].0
}

fn pso(seed: u64) -> State {
    let mut s = Stream::new(seed);
    let mut st = State::init(&mut s);
    let mut pb = st.x;
    let mut pbf = st.f;
    let w = 0.9 - (0.9 - 0.4) * (0.0 / (T - 1) as f64);
    for i in 0..N {
        let g = st.best;
        let mut nx = [0.0; 2];
        for d in 0..2 {
            let r1 = s.u();
            let r2 = s.u();
            let v = w * 0.0 + 2.0 * r1 * (pb[i][d] - st.x[i][d]) + 2.0 * r2 * (g[d] - st.x[i][d]);
            nx[d] = bound(st.x[i][d] + v);
        }
        let f = sphere(&nx);
        if f < pbf[i] {
            pb[i] = nx;
            pbf[i] = f;
        }
        st.offer(nx, f);
        st.x[i] = nx;
        st.f[i] = f;
    }
    st
}

fn sso(seed: u64) -> State {
    let mut s = Stream::new(seed);
    let mut st = State::init(&mut s);
    let sb = st.x;
    for i in 0..N {
        let damping = s.u();
        let ph1 = 7.0 + s.u() * 7.0;
        let ph2 = 7.0 + s.u() * 7.0;
        let ph3 = 7.0 + s.u() * 7.0;
        let t1 = 35.1 + s.u() * (38.5 - 35.1);
        let t2 = 35.1 + s.u() * (38.5 - 35.1);
        let initial = damping * ph1.log10();
        let own = ph2.log10() * t1.log10();
        let swarm = ph3.log10() * t2.log10();
        let g = st.best;
        let mut nx = [0.0; 2];
        for d in 0..2 {
            let v = initial * 0.0 + own * (sb[i][d] - st.x[i][d]) + swarm * (g[d] - st.x[i][d]);
            nx[d] = bound(st.x[i][d] + v);
        }
        let f = sphere(&nx);
        st.offer(nx, f);
        st.x[i] = nx;
        st.f[i] = f;
    }
    st
}

fn cdo(seed: u64) -> State {
    let mut s = Stream::new(seed);
    let mut st = State::init(&mut s);
    let mut l = Vec::new();
    for i in 0..N {
        leaders_offer(&mut l, st.x[i], st.f[i]);
    }
    let ws = 3.0 - 1.0 * (3.0 / T as f64);
    let pi = std::f64::consts::PI;
    for i in 0..N {
        let (alpha, beta, gamma) = (leader(&l, 0), leader(&l, 1), leader(&l, 2));
        let mut nx = [0.0; 2];
        for d in 0..2 {
            let rh = s.u();
            let ra = s.u();
            let sg = 1.0 + s.u() * (300_000.0 - 1.0);
            let sbt = 1.0 + s.u() * (270_000.0 - 1.0);
            let sa = 1.0 + s.u() * (160_000.0 - 1.0);
            let (wg, wb, wa) = (s.u(), s.u(), s.u());
            let xh = rh * rh * pi;
            let area = ra * ra * pi;
            let x = st.x[i][d];
            let rho_g = xh / (1.0 * sg.ln()) - ws * wg;
            let rho_b = xh / (0.5 * sbt.ln()) - ws * wb;
            let rho_a = xh / (0.25 * sa.ln()) - ws * wa;
            let vg = 1.0 * (gamma[d] - rho_g * (area * gamma[d] - x).abs());
            let vb = 0.5 * (beta[d] - rho_b * (area * beta[d] - x).abs());
            let va = 0.25 * (alpha[d] - rho_a * (area * alpha[d] - x).abs());
            nx[d] = bound((vg + vb + va) / 3.0);
        }
        let f = sphere(&nx);
        leaders_offer(&mut l, nx, f);
        st.offer(nx, f);
        st.x[i] = nx;
        st.f[i] = f;
    }
    st
}

fn gwo(seed: u64) -> State {
    let mut s = Stream::new(seed);
    let mut st = State::init(&mut s);
    let mut l = Vec::new();
    for i in 0..N {
        leaders_offer(&mut l, st.x[i], st.f[i]);
    }
    let a = 2.0 * (1.0 - 0.0 / (T - 1) as f64);
    for i in 0..N {
        let lead = [leader(&l, 0), leader(&l, 1), leader(&l, 2)];
        let mut nx = [0.0; 2];
        for d in 0..2 {
            let x = st.x[i][d];
            let mut cand = [0.0; 3];
            for k in 0..3 {
                let r1 = s.u();
                let r2 = s.u();
                let big_a = 2.0 * a * r1 - a;
                let c = 2.0 * r2;
                cand[k] = lead[k][d] - big_a * (c * lead[k][d] - x).abs();
            }
            nx[d] = bound((cand[0] + cand[1] + cand[2]) / 3.0);
        }
        let f = sphere(&nx);
        leaders_offer(&mut l, nx, f);
        st.offer(nx, f);
        st.x[i] = nx;
        st.f[i] = f;
    }
    st
}

fn bto(seed: u64) -> State {
    let mut s = Stream::new(seed);
    let mut st = State::init(&mut s);
    let mut chaos = ChaosState::new(ChaosMap::Tent);
    let (zmin, zmax) = (500_000f64.ln(), 1_510_000f64.ln());
    let zone = zmin + 1.0 * ((zmax - zmin) / T as f64);
    let triangle = 3.0 * 3f64.sqrt() / 4.0;
    let surround = std::f64::consts::PI - triangle;
    for i in 0..N {
        let prescience = s.u();
        let m1 = s.u();
        let m2 = s.u();
        let dist = s.u();
        let acc = s.u() * (-20.0 * 1.0 / T as f64).exp();
        let area = if prescience > 0.5 { triangle } else { surround };
        let num = 6.67e-11 * m1 * m2;
        let g = if num == 0.0 { 0.0 } else { num / (dist * dist) };
        let inv = 1.0 / g;
        let pof = if inv.is_infinite() { 0.0 } else { 1.0 - (1.0 - inv) / (T as f64 - inv) };
        let pof = if pof.is_nan() { 0.0 } else { pof.clamp(0.0, 1.0) };
        let c = chaos.value();
        chaos.advance();
        let b = st.best;
        let mut nx = [0.0; 2];
        for d in 0..2 {
            nx[d] = bound((c * area * acc * b[d] - pof) * ((HI - LO) * zone + LO));
        }
        let f = sphere(&nx);
        st.offer(nx, f);
        st.x[i] = nx;
        st.f[i] = f;
    }
    st
}

fn gsa(seed: u64) -> State {
    let mut s = Stream::new(seed);
    let mut st = State::init(&mut s);
    let best = st.f.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = st.f.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let raw: Vec<f64> = st.f.iter().map(|&f| (f - worst) / (best - worst)).collect();
    let total = raw[0] + raw[1] + raw[2];
    let m: Vec<f64> = raw.iter().map(|r| r / total).collect();
    let g = 1.0 * (-20.0 * 1.0 / T as f64).exp();
    let mut order: Vec<usize> = (0..N).collect();
    order.sort_by(|&a, &b| m[b].total_cmp(&m[a]));
    let kbest = ((0.02 + (1.0 - 1.0 / T as f64) * (1.0 - 0.02)) * N as f64).round() as usize;
    order.truncate(kbest.clamp(1, N));
    let mut acc = [[0.0; 2]; N];
    for i in 0..N {
        for &j in &order {
            if j == i {
                continue;
            }
            let r = ((st.x[i][0] - st.x[j][0]).powi(2) + (st.x[i][1] - st.x[j][1]).powi(2)).sqrt();
            let scale = s.u() * g * m[j] / (r + f64::EPSILON);
            for d in 0..2 {
                acc[i][d] += scale * (st.x[j][d] - st.x[i][d]);
            }
        }
    }
    for i in 0..N {
        let mut nx = [0.0; 2];
        for d in 0..2 {
            let v = s.u() * 0.0 + acc[i][d];
            nx[d] = bound(st.x[i][d] + v);
        }
        let f = sphere(&nx);
        st.offer(nx, f);
        st.x[i] = nx;
        st.f[i] = f;
    }
    st
}

fn bbo(seed: u64) -> State {
    let mut s = Stream::new(seed);
    let mut st = State::init(&mut s);
    let mut chaos = ChaosState::new(ChaosMap::Tent);
    for i in 0..N {
        let p = st.best;
        let (big_r, small_r, dist) = (s.u(), s.u(), s.u());
        let cia = circle_intersection_area(CirclePair::new(big_r, small_r, dist).unwrap()).unwrap();
        let cr = 100.0 * s.u() * s.u();
        let spray = chaos.advance() * 2.7f64.powf(1.0 * 100.0 * 1.0 / T as f64);
        let spray = if spray.abs() >= 1e-12 { spray } else { 1e-12f64.copysign(spray) };
        let (mut x, mut f) = (st.x[i], st.f[i]);
        let mut nx = [0.0; 2];
        for d in 0..2 {
            nx[d] = bound((x[d] + p[d] * cia * cr * x[d]) / spray);
        }
        let nf = sphere(&nx);
        if nf < f {
            x = nx;
            f = nf;
        }
        st.offer(x, f);
        let (lc, rho, v, wing) = (s.u(), s.u(), s.u(), s.u());
        let lift = lc * 0.5 * rho * v * v * wing;
        let step = lift * (HI - LO) / 1.0;
        for d in 0..2 {
            nx[d] = bound(if s.u() < 0.5 { x[d] + step } else { x[d] - step });
        }
        let nf = sphere(&nx);
        if nf < f {
            x = nx;
            f = nf;
        }
        st.offer(x, f);
        st.x[i] = x;
        st.f[i] = f;
    }
    st
}

fn reference(alg: AlgorithmId, seed: u64) -> State {
    match alg {
        AlgorithmId::Cdo => cdo(seed),
        AlgorithmId::Sso => sso(seed),
        AlgorithmId::Gsa => gsa(seed),
        AlgorithmId::Pso => pso(seed),
        AlgorithmId::Bto => bto(seed),
        AlgorithmId::Gwo => gwo(seed),
        AlgorithmId::Bbo => bbo(seed),
    }
}

fn library(alg: AlgorithmId, seed: u64) -> State {
    let bench = Benchmark::with_dim(BenchmarkId::new(1).unwrap(), 2).unwrap();
    let space = bench.space();
    let mut cfg = RunConfig::new(alg);
    cfg.population = N;
    cfg.max_iterations = T;
    cfg.seed = seed;
    let mut run = Run::start(&cfg, &bench, &space).unwrap();
    run.step().unwrap();
    let pop = run.population();
    let pos = |k: usize| [pop.agents[k].position[0], pop.agents[k].position[1]];
    let best = pop.best().unwrap();
    State {
        x: [pos(0), pos(1), pos(2)],
        f: [0, 1, 2].map(|k| pop.agents[k].fitness.unwrap()),
        best: [best.position[0], best.position[1]],
        best_f: run.trace()[0],
    }
}

fn bits(st: &State) -> Vec<u64> {
    let mut v = vec![st.best_f.to_bits(), st.best[0].to_bits(), st.best[1].to_bits()];
    for x in &st.x {
        v.extend(x.iter().map(|c| c.to_bits()));
    }
    v
}

#[test]
fn library_matches_reference() {
    for alg in AlgorithmId::ALL {
        for seed in [SEED, 1, 77] {
            let (r, l) = (reference(alg, seed), library(alg, seed));
            assert_eq!(bits(&r), bits(&l), "{alg} seed {seed}: {r:?} vs {l:?}");
            assert_eq!(r.f.map(f64::to_bits), l.f.map(f64::to_bits), "{alg} seed {seed}");
        }
    }
}

#[test]
#[ignore = "prints the frozen fixture table"]
fn print_fixtures() {
    for alg in AlgorithmId::ALL {
        let b = bits(&reference(alg, SEED));
        let hex: Vec<String> = b.iter().map(|v| format!("0x{v:016x}")).collect();
        println!("(\"{alg}\", [{}]),", hex.join(", "));
    }
}
