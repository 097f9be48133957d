use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use serde::Serialize;

use frodo_core::batch::Batch;
use frodo_core::draft::{merge_drafts, DraftSettings, OntologyDraft};
use frodo_core::metrics::{compute_metrics, report_csv, MetricsReport};
use frodo_core::rdf::{parse_turtle, Iri};
use frodo_core::source::{CompetencyQuestion, MachineReader};
use frodo_server::{
    bind, draft_payload, interrupted, router, serve as serve_api, AppState, CorsOrigins,
    DraftPayload, ServeError,
};

use crate::config::{resolve_source, Env, FileConfig};
use crate::{DraftArgs, Failure, Format, MetricsArgs, ServeArgs};

fn read_questions(args: &DraftArgs) -> Result<Vec<CompetencyQuestion>, Failure> {
    let mut cqs = Vec::new();
    for text in &args.cqs {
        cqs.push(
            CompetencyQuestion::new(text.as_str())
                .map_err(|e| Failure::Usage(format!("--cq: {e}")))?,
        );
    }
    if let Some(path) = &args.input {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let cq = match line.split_once('\t') {
                Some((id, q)) => CompetencyQuestion::new(q).map(|c| c.with_id(id)),
                None => CompetencyQuestion::new(line),
            };
            cqs.push(cq.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?);
        }
    }
    if cqs.is_empty() {
        return Err(Failure::Usage(
            "no competency question given; use --cq <TEXT> or --input <FILE>".into(),
        ));
    }
    let mut seen: BTreeMap<String, &str> = BTreeMap::new();
    for cq in &cqs {
        if let Some(prev) = seen.insert(cq.slug(), cq.text()) {
            return Err(Failure::Usage(format!(
                "`{prev}` and `{}` would both be written as {}.*",
                cq.text(),
                cq.slug()
            )));
        }
    }
    Ok(cqs)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    println!("{}", path.display());
    Ok(())
}

fn write_outputs(
    dir: &Path,
    stem: &str,
    payload: &DraftPayload,
    args: &DraftArgs,
) -> Result<(), Failure> {
    if matches!(args.format, Format::Manchester | Format::Both) {
        write_file(&dir.join(format!("{stem}.omn")), &payload.manchester)?;
    }
    if matches!(args.format, Format::Turtle | Format::Both) {
        write_file(&dir.join(format!("{stem}.ttl")), &payload.turtle)?;
    }
    if args.json {
        write_file(&dir.join(format!("{stem}.json")), &payload.to_json())?;
    }
    Ok(())
}

pub fn draft(args: DraftArgs) -> Result<(), Failure> {
    let file = FileConfig::load(args.source.config.as_deref())?;
    let cqs = read_questions(&args)?;
    let source = resolve_source(&args.source, &Env::from_process(), &file)?;
    let reader = MachineReader::new(source).map_err(|e| Failure::Usage(e.to_string()))?;
    let namespace = match args.namespace.as_ref().or(file.namespace.as_ref()) {
        Some(ns) => {
            Some(Iri::new(ns.as_str()).map_err(|e| Failure::Usage(format!("--namespace: {e}")))?)
        }
        None => None,
    };
    let settings = DraftSettings {
        namespace,
        ..DraftSettings::default()
    };
    let batch = match args.jobs.or(file.jobs) {
        Some(1) => Batch::sequential(),
        jobs => Batch::parallel(jobs),
    };
    let results = batch.map(&cqs, |cq| draft_payload(&reader, &settings, cq));

    let failures: Vec<(String, String)> = cqs
        .iter()
        .zip(&results)
        .filter_map(|(cq, r)| r.as_ref().err().map(|e| (cq.label(), e.to_string())))
        .collect();
    if !failures.is_empty() {
        let width = failures
            .iter()
            .map(|(l, _)| l.len())
            .max()
            .unwrap_or(0)
            .max(2);
        eprintln!("{:<width$}  ERROR", "CQ");
        for (label, err) in &failures {
            eprintln!("{label:<width$}  {err}");
        }
        if !args.keep_going {
            return Err(Failure::Upstream(format!(
                "{} of {} questions failed; nothing written (use --keep-going to write the rest)",
                failures.len(),
                cqs.len()
            )));
        }
    }

    let out_dir: PathBuf = args
        .out_dir
        .clone()
        .or(file.out_dir)
        .unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&out_dir)
        .map_err(|e| Failure::Io(format!("cannot create {}: {e}", out_dir.display())))?;
    let mut drafts: Vec<OntologyDraft> = Vec::new();
    for (cq, result) in cqs.iter().zip(results) {
        let Ok(payload) = result else { continue };
        write_outputs(&out_dir, &cq.slug(), &payload, &args)?;
        drafts.push(payload.draft);
    }
    if args.merge && !drafts.is_empty() {
        let merged =
            merge_drafts(&drafts).map_err(|e| Failure::Upstream(format!("merge failed: {e}")))?;
        write_outputs(
            &out_dir,
            "merged",
            &DraftPayload::new(merged, Vec::new()),
            &args,
        )?;
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Upstream(format!(
            "{} of {} questions failed",
            failures.len(),
            cqs.len()
        )))
    }
}

#[derive(Serialize)]
struct Row<'a> {
    ontology: &'a str,
    #[serde(flatten)]
    report: &'a MetricsReport,
}

pub fn metrics(args: MetricsArgs) -> Result<(), Failure> {
    let mut rows = Vec::new();
    for path in &args.files {
        let name = path.display().to_string();
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {name}: {e}")))?;
        let g = parse_turtle(&text).map_err(|e| Failure::Io(format!("{name}: {e}")))?;
        rows.push((name, compute_metrics(&g)));
    }
    let out = if args.json {
        let rows: Vec<Row> = rows
            .iter()
            .map(|(o, r)| Row {
                ontology: o,
                report: r,
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
        s.push('\n');
        s
    } else {
        report_csv(&rows)
    };
    match &args.out {
        Some(path) => fs::write(path, out)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(out.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

pub fn serve(args: ServeArgs) -> Result<(), Failure> {
    let file = FileConfig::load(args.source.config.as_deref())?;
    let source = resolve_source(&args.source, &Env::from_process(), &file)?;
    let reader = MachineReader::new(source).map_err(|e| Failure::Usage(e.to_string()))?;
    let addr: SocketAddr = format!("{}:{}", args.host, args.port)
        .parse()
        .map_err(|e| Failure::Usage(format!("bad --host/--port: {e}")))?;
    let origins = if !args.cors_origins.is_empty() {
        args.cors_origins.clone()
    } else {
        file.cors_origins.clone().unwrap_or_default()
    };
    let cors = if origins.is_empty() {
        CorsOrigins::Any
    } else {
        CorsOrigins::List(origins)
    };
    let app = router(
        AppState {
            reader,
            settings: DraftSettings::default(),
        },
        &cors,
    );
    let runtime = tokio::runtime::Runtime::new()
        .map_err(|e| Failure::Io(format!("cannot start runtime: {e}")))?;
    runtime.block_on(async {
        let listener = bind(addr).await.map_err(|e| match e {
            ServeError::PortInUse(_) => {
                Failure::Io(format!("port {} is already in use", addr.port()))
            }
            other => Failure::Io(other.to_string()),
        })?;
        let local = listener
            .local_addr()
            .map_err(|e| Failure::Io(e.to_string()))?;
        eprintln!("listening on http://{local}");
        serve_api(listener, app, interrupted())
            .await
            .map_err(|e| Failure::Io(e.to_string()))
    })
}
