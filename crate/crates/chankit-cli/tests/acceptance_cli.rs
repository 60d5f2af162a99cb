//! CLI-level acceptance: byte-deterministic commands across identical runs,
//! plus the exit-code contract.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn chankit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chankit"))
}

fn run_ok(args: &[&str], cwd: &Path) -> Output {
    let out = chankit().args(args).current_dir(cwd).output().expect("spawn chankit");
    assert!(
        out.status.success(),
        "chankit {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn spec_csv(rows: usize) -> String {
    let mut s = String::from(
        "link_id,distance_m,scenario,n_mpcs,delay_spread_ns,power_decay_db_per_ns,pl_model,param1,param2,shadow_sigma_db,noise_floor_dbm,seed\n",
    );
    for i in 0..rows {
        let (scenario, target, n, noise) = match i % 3 {
            0 => ("LOS", 33.9, 2.11, -95.0),
            1 => ("NLOS", 43.1, 3.25, -118.0),
            _ => ("NLOS_GLASS", 43.1, 3.25, -118.0),
        };
        let d = 10.0 + (i as f64) * 2.0;
        s.push_str(&format!(
            "T{0}-R{0},{d},{scenario},6,{target},0.05,cim,{n},1,3,{noise},{1}\n",
            i,
            100 + i
        ));
    }
    s
}

fn dir_contents(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut map = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else {
                let rel = p.strip_prefix(dir).unwrap().to_string_lossy().into_owned();
                map.insert(rel, fs::read(&p).unwrap());
            }
        }
    }
    map
}

fn assert_dirs_identical(a: &Path, b: &Path) {
    let ca = dir_contents(a);
    let cb = dir_contents(b);
    let names_a: Vec<&String> = ca.keys().collect();
    let names_b: Vec<&String> = cb.keys().collect();
    assert_eq!(names_a, names_b, "file sets differ between {a:?} and {b:?}");
    for (name, bytes) in &ca {
        assert_eq!(bytes, &cb[name], "file {name} differs between runs");
    }
}

struct Workspace {
    root: PathBuf,
}

impl Workspace {
    fn new(tag: &str) -> Self {
        let root = std::env::temp_dir().join(format!("chankit-test-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&root);
        fs::create_dir_all(&root).unwrap();
        Workspace { root }
    }

    fn path(&self, rel: &str) -> PathBuf {
        self.root.join(rel)
    }

    fn p(&self, rel: &str) -> String {
        self.path(rel).to_string_lossy().into_owned()
    }
}

impl Drop for Workspace {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.root);
    }
}

fn synth_args<'a>(spec: &'a str, out: &'a str) -> Vec<&'a str> {
    vec![
        "synth",
        "--spec",
        spec,
        "--out-dir",
        out,
        "--n-bins",
        "256",
        "--single-elevation",
        "--seed",
        "7",
    ]
}

#[test]
fn criterion_9_cli_byte_determinism() {
    let ws = Workspace::new("det");
    fs::write(ws.path("spec.csv"), spec_csv(4)).unwrap();
    let spec = ws.p("spec.csv");

    for dir in ["camp1", "camp2"] {
        run_ok(&synth_args(&spec, &ws.p(dir)), &ws.root);
    }
    assert_dirs_identical(&ws.path("camp1"), &ws.path("camp2"));

    for dir in ["ext1", "ext2"] {
        let mut args = vec!["extract".to_string(), "--out-dir".into(), ws.p(dir)];
        for i in 0..4 {
            args.push(ws.p(&format!("camp1/T{i}-R{i}.sweep")));
        }
        let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        run_ok(&refs, &ws.root);
    }
    assert_dirs_identical(&ws.path("ext1"), &ws.path("ext2"));

    for dir in ["rep1", "rep2"] {
        run_ok(&["report", "--campaign", &ws.p("camp1"), "--out-dir", &ws.p(dir)], &ws.root);
    }
    assert_dirs_identical(&ws.path("rep1"), &ws.path("rep2"));

    for dir in ["fit1", "fit2"] {
        fs::create_dir_all(ws.path(dir)).unwrap();
        run_ok(
            &[
                "fit",
                "--table",
                &ws.p("rep1/pathloss.csv"),
                "--out",
                &ws.p(&format!("{dir}/fits.csv")),
                "--residuals",
                &ws.p(&format!("{dir}/residuals.csv")),
            ],
            &ws.root,
        );
    }
    assert_dirs_identical(&ws.path("fit1"), &ws.path("fit2"));

    for dir in ["st1", "st2"] {
        let mut args = vec![
            "stats".to_string(),
            "--index".into(),
            ws.p("camp1/index.csv"),
            "--out-dir".into(),
            ws.p(dir),
            "--svg".into(),
        ];
        for i in 0..4 {
            args.push(ws.p(&format!("ext1/T{i}-R{i}.mpc.csv")));
        }
        let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        run_ok(&refs, &ws.root);
    }
    assert_dirs_identical(&ws.path("st1"), &ws.path("st2"));

    println!("PASS criterion 9 (CLI): synth/extract/report/fit/stats byte-identical across reruns");
}

#[test]
fn nineteen_scenario_campaign_renders_nineteen_sweeps() {
    let ws = Workspace::new("19");
    fs::write(ws.path("spec.csv"), spec_csv(19)).unwrap();
    run_ok(&synth_args(&ws.p("spec.csv"), &ws.p("camp")), &ws.root);
    let sweeps = fs::read_dir(ws.path("camp"))
        .unwrap()
        .filter(|e| {
            e.as_ref().unwrap().path().extension().map(|x| x == "sweep").unwrap_or(false)
        })
        .count();
    assert_eq!(sweeps, 19);
    let index = fs::read_to_string(ws.path("camp/index.csv")).unwrap();
    assert_eq!(index.lines().count(), 20);
}

#[test]
fn exit_codes_follow_the_contract() {
    let ws = Workspace::new("exit");

    // Usage error: unknown flag.
    let out = chankit().args(["extract", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // Help is not an error.
    let out = chankit().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    // Missing input file: data error.
    let out = chankit()
        .args(["extract", &ws.p("nope.sweep"), "--out-dir", &ws.p("out")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Bad synth spec: data error.
    fs::write(ws.path("bad.csv"), "not,a,spec\n").unwrap();
    let out = chankit()
        .args(["synth", "--spec", &ws.p("bad.csv"), "--out-dir", &ws.p("camp")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Empty spec: data error.
    fs::write(
        ws.path("empty.csv"),
        "link_id,distance_m,scenario,n_mpcs,delay_spread_ns,power_decay_db_per_ns,pl_model,param1,param2,shadow_sigma_db,noise_floor_dbm,seed\n",
    )
    .unwrap();
    let out = chankit()
        .args(["synth", "--spec", &ws.p("empty.csv"), "--out-dir", &ws.p("camp")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Single-distance table: insufficient data.
    fs::write(
        ws.path("one.csv"),
        "link_id,distance_m,scenario,path_loss_db\nA,10,LOS,81.0\nB,10,LOS,83.0\n",
    )
    .unwrap();
    let out = chankit()
        .args(["fit", "--table", &ws.p("one.csv"), "--out", &ws.p("fits.csv")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("insufficient"), "stderr: {stderr}");
}

#[test]
fn stats_skips_empty_mpc_files_with_warning() {
    let ws = Workspace::new("stats");
    fs::write(ws.path("good.mpc.csv"), "tau_ns,power_dbm,aod_az,aod_el,aoa_az,aoa_el\n10.0,-70.0,0,0,0,0\n20.0,-75.0,0,0,20,0\n").unwrap();
    fs::write(ws.path("empty.mpc.csv"), "tau_ns,power_dbm,aod_az,aod_el,aoa_az,aoa_el\n").unwrap();
    let out = chankit()
        .args(["stats", &ws.p("good.mpc.csv"), &ws.p("empty.mpc.csv"), "--out-dir", &ws.p("out")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty"));
    let stats = fs::read_to_string(ws.path("out/stats.csv")).unwrap();
    assert_eq!(stats.lines().count(), 2, "stats: {stats}");
    assert!(stats.lines().nth(1).unwrap().starts_with("good,"));
}

#[test]
fn report_skips_corrupt_sweeps_and_fails_when_all_do() {
    let ws = Workspace::new("corrupt");
    fs::write(ws.path("spec.csv"), spec_csv(4)).unwrap();
    run_ok(&synth_args(&ws.p("spec.csv"), &ws.p("camp")), &ws.root);

    // Corrupt one sweep: the report continues on the rest.
    fs::write(ws.path("camp/T0-R0.sweep"), "garbage\n").unwrap();
    let out = chankit()
        .args(["report", "--campaign", &ws.p("camp"), "--out-dir", &ws.p("rep")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipping"));
    let table = fs::read_to_string(ws.path("rep/pathloss.csv")).unwrap();
    assert_eq!(table.lines().count(), 4, "table: {table}");

    // Corrupt all sweeps: the report fails.
    for i in 0..4 {
        fs::write(ws.path(&format!("camp/T{i}-R{i}.sweep")), "garbage\n").unwrap();
    }
    let out = chankit()
        .args(["report", "--campaign", &ws.p("camp"), "--out-dir", &ws.p("rep2")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_link_campaign_yields_single_panel_report() {
    let ws = Workspace::new("single");
    fs::write(ws.path("spec.csv"), spec_csv(1)).unwrap();
    run_ok(&synth_args(&ws.p("spec.csv"), &ws.p("camp")), &ws.root);
    run_ok(&["report", "--campaign", &ws.p("camp"), "--out-dir", &ws.p("rep")], &ws.root);
    let table = fs::read_to_string(ws.path("rep/pathloss.csv")).unwrap();
    assert_eq!(table.lines().count(), 2);
    let svg = fs::read_to_string(ws.path("rep/pathloss.svg")).unwrap();
    assert_eq!(svg.matches("<circle").count(), 1);
    // A single distance cannot support a fit; the scatter panel remains.
    assert_eq!(svg.matches("<polyline").count(), 0);
    let fits = fs::read_to_string(ws.path("rep/fits.csv")).unwrap();
    assert_eq!(fits.lines().count(), 1);
}

#[test]
fn fit_report_keeps_floating_sigma_at_or_below_close_in() {
    let ws = Workspace::new("sigmas");
    let mut table = String::from("link_id,distance_m,scenario,path_loss_db\n");
    for (i, (d, pl)) in
        [(10.0, 95.2), (15.0, 98.9), (22.0, 106.1), (29.0, 104.8), (41.0, 112.3), (50.0, 115.0)]
            .iter()
            .enumerate()
    {
        table.push_str(&format!("L{i},{d},LOS,{pl}\n"));
    }
    fs::write(ws.path("table.csv"), table).unwrap();
    run_ok(
        &["fit", "--table", &ws.p("table.csv"), "--out", &ws.p("fits.csv"), "--model", "both"],
        &ws.root,
    );
    let fits = fs::read_to_string(ws.path("fits.csv")).unwrap();
    let sigma_of = |model: &str| -> f64 {
        fits.lines()
            .find(|l| l.starts_with(model))
            .unwrap()
            .split(',')
            .nth(4)
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!(sigma_of("fim") <= sigma_of("cim") + 1e-12);
}

#[test]
fn cdf_svg_has_one_polyline_per_pool() {
    let ws = Workspace::new("svg");
    fs::write(ws.path("spec.csv"), spec_csv(4)).unwrap();
    run_ok(&synth_args(&ws.p("spec.csv"), &ws.p("camp")), &ws.root);
    let mut args = vec![
        "extract".to_string(),
        "--out-dir".into(),
        ws.p("ext"),
    ];
    for i in 0..4 {
        args.push(ws.p(&format!("camp/T{i}-R{i}.sweep")));
    }
    let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    run_ok(&refs, &ws.root);

    let mut args = vec![
        "stats".to_string(),
        "--index".into(),
        ws.p("camp/index.csv"),
        "--out-dir".into(),
        ws.p("st"),
        "--svg".into(),
    ];
    for i in 0..4 {
        args.push(ws.p(&format!("ext/T{i}-R{i}.mpc.csv")));
    }
    let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    run_ok(&refs, &ws.root);

    let svg = fs::read_to_string(ws.path("st/rmsds_cdf.svg")).unwrap();
    // Two pools: LOS and NLOS (glass folds into NLOS).
    assert_eq!(svg.matches("<polyline").count(), 2, "svg: {svg}");
    assert!(svg.contains("<svg xmlns"));
    assert!(svg.ends_with("</svg>\n"));

    let report_svg_path = {
        run_ok(&["report", "--campaign", &ws.p("camp"), "--out-dir", &ws.p("rep")], &ws.root);
        ws.path("rep/pathloss.svg")
    };
    let svg = fs::read_to_string(report_svg_path).unwrap();
    // One circle per path-loss sample, split across the two panels.
    assert_eq!(svg.matches("<circle").count(), 4);
    // Two fitted lines per panel (close-in and floating-intercept).
    assert_eq!(svg.matches("<polyline").count(), 4);
}
