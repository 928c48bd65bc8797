use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tres_core::formula::{parse, Literal, PropSymbol};
use tres_core::oracle::{build_graph_with, OracleConfig};
use tres_core::snf::text::parse_clause_set;
use tres_core::snf::StepClause;
use tres_core::temporal::{augment, find_loops, search_loop, LoopConfig};
use tres_core::{prove_with, Config, Exec, Mode};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn prover(c: &mut Criterion) {
    let f = parse("(F p & G (p -> X p)) -> F G p").unwrap();
    let mut group = c.benchmark_group("prove");
    for (name, exec) in MODES {
        let cfg = Config {
            exec,
            ..Config::default()
        };
        group.bench_with_input(BenchmarkId::new(name, "larger example"), &f, |b, f| {
            b.iter(|| prove_with(black_box(f), Mode::Validity, &cfg).unwrap())
        });
    }
    group.finish();
}

fn behaviour_graph(c: &mut Criterion) {
    let cs = parse_clause_set(
        "start => f\nf => F ~p\nf => X a\na => X (b | x)\nb => X a\nb => X p\n\
         a => X p\na => X ~x\nc => X (d | e)\nd => F c\ne => X (c | g)\n",
    )
    .unwrap();
    let aug = augment(&cs).base;
    let mut group = c.benchmark_group("behaviour graph");
    group.sample_size(20);
    for (name, exec) in MODES {
        let cfg = OracleConfig {
            max_symbols: 12,
            exec,
        };
        group.bench_function(name, |b| {
            b.iter(|| build_graph_with(black_box(&aug), &Default::default(), &cfg).unwrap())
        });
    }
    group.finish();
}

fn loops(c: &mut Criterion) {
    let cs = parse_clause_set(
        "f => X a\na => X (b | x)\nb => X a\nb => X p\na => X p\na => X ~x\na => X b\n\
         c => X (a | d)\nd => X c\nd => X p\nc => X p\ne => X (c | f)\n",
    )
    .unwrap();
    let steps: Vec<(usize, StepClause)> = cs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.as_step().map(|s| (i + 1, s.clone())))
        .collect();
    let l = Literal::new(PropSymbol::user("p"), false);
    let mut group = c.benchmark_group("loop search");
    group.sample_size(20);
    for (name, exec) in MODES {
        let cfg = LoopConfig {
            exec,
            ..LoopConfig::default()
        };
        group.bench_function(BenchmarkId::new("naive", name), |b| {
            b.iter(|| find_loops(black_box(&steps), &l, &cfg).unwrap())
        });
        group.bench_function(BenchmarkId::new("closed merge", name), |b| {
            b.iter(|| search_loop(black_box(&steps), &l, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, prover, behaviour_graph, loops);
criterion_main!(benches);
