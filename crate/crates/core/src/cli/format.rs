//! JSON file formats. Field order is fixed by the struct definitions, so
//! writing a value read from disk is byte-stable.

use serde::{Deserialize, Serialize};

use crate::bratteli::OrderedBratteliDiagram;
use crate::construction::{Building, LevelStep, RankConstruction, Schedule, Segment};
use crate::sadic::{DirectiveSequence, Morphism};

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Res<T> = std::result::Result<T, FormatError>;

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum ScheduleJson {
    Explicit,
    Periodic { cycle_len: usize },
}

impl From<Schedule> for ScheduleJson {
    fn from(s: Schedule) -> Self {
        match s {
            Schedule::Explicit => ScheduleJson::Explicit,
            Schedule::Periodic { cycle_len } => ScheduleJson::Periodic { cycle_len },
        }
    }
}

impl From<ScheduleJson> for Schedule {
    fn from(s: ScheduleJson) -> Self {
        match s {
            ScheduleJson::Explicit => Schedule::Explicit,
            ScheduleJson::Periodic { cycle_len } => Schedule::Periodic { cycle_len },
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepJson {
    buildings: Vec<Vec<(usize, Option<u64>)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstructionJson {
    kind: String,
    arity0: usize,
    steps: Vec<StepJson>,
    schedule: ScheduleJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramLevelJson {
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    incoming: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    kind: String,
    levels: Vec<DiagramLevelJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismJson {
    rules: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SadicJson {
    kind: String,
    alphabets: Vec<usize>,
    morphisms: Vec<MorphismJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    schedule: Option<ScheduleJson>,
}

#[derive(Deserialize)]
struct KindOnly {
    kind: String,
}

/// Any of the three file kinds.
#[derive(Clone, Debug)]
pub enum Document {
    Construction(RankConstruction),
    Diagram(OrderedBratteliDiagram),
    Sadic(DirectiveSequence),
}

fn json_err(e: serde_json::Error) -> FormatError {
    FormatError(format!("line {} column {}: {e}", e.line(), e.column()))
}

pub fn parse_document(text: &str) -> Res<Document> {
    let kind: KindOnly = serde_json::from_str(text).map_err(json_err)?;
    match kind.kind.as_str() {
        "rank_construction" => parse_construction(text).map(Document::Construction),
        "bratteli" => parse_diagram(text).map(Document::Diagram),
        "sadic" => parse_sadic(text).map(Document::Sadic),
        other => Err(FormatError(format!(
            "field \"kind\": unknown value {other:?} (expected rank_construction, bratteli or sadic)"
        ))),
    }
}

fn expect_kind(found: &str, want: &str) -> Res<()> {
    if found != want {
        return Err(FormatError(format!(
            "field \"kind\": expected {want:?}, found {found:?}"
        )));
    }
    Ok(())
}

pub fn parse_construction(text: &str) -> Res<RankConstruction> {
    let j: ConstructionJson = serde_json::from_str(text).map_err(json_err)?;
    expect_kind(&j.kind, "rank_construction")?;
    let mut steps = Vec::with_capacity(j.steps.len());
    for (i, s) in j.steps.into_iter().enumerate() {
        let mut buildings = Vec::with_capacity(s.buildings.len());
        for (q, b) in s.buildings.into_iter().enumerate() {
            if b.is_empty() {
                return Err(FormatError(format!("steps[{i}].buildings[{q}]: building is empty")));
            }
            buildings.push(Building {
                segments: b.into_iter().map(|(index, spacer)| Segment { index, spacer }).collect(),
            });
        }
        steps.push(LevelStep { buildings });
    }
    let c = RankConstruction {
        arity0: j.arity0,
        steps,
        schedule: j.schedule.into(),
    };
    if let Some(v) = c.validate().first() {
        return Err(FormatError(format!("invalid construction: {v}")));
    }
    Ok(c)
}

pub fn write_construction(c: &RankConstruction) -> String {
    let j = ConstructionJson {
        kind: "rank_construction".into(),
        arity0: c.arity0,
        steps: c
            .steps
            .iter()
            .map(|s| StepJson {
                buildings: s
                    .buildings
                    .iter()
                    .map(|b| b.segments.iter().map(|g| (g.index, g.spacer)).collect())
                    .collect(),
            })
            .collect(),
        schedule: c.schedule.into(),
    };
    serde_json::to_string(&j).expect("serializable") + "\n"
}

pub fn parse_diagram(text: &str) -> Res<OrderedBratteliDiagram> {
    let j: DiagramJson = serde_json::from_str(text).map_err(json_err)?;
    expect_kind(&j.kind, "bratteli")?;
    let Some(root) = j.levels.first() else {
        return Err(FormatError(
            "field \"levels\": at least the root level is required".into(),
        ));
    };
    if root.size != 1 || root.incoming.is_some() {
        return Err(FormatError(
            "levels[0]: the root level must be {\"size\":1} without incoming lists".into(),
        ));
    }
    let mut incoming = Vec::with_capacity(j.levels.len() - 1);
    for (k, lvl) in j.levels.iter().enumerate().skip(1) {
        let Some(lists) = &lvl.incoming else {
            return Err(FormatError(format!("levels[{k}]: missing field \"incoming\"")));
        };
        if lists.len() != lvl.size {
            return Err(FormatError(format!(
                "levels[{k}]: size is {} but {} incoming lists are given",
                lvl.size,
                lists.len()
            )));
        }
        incoming.push(lists.clone());
    }
    let d = OrderedBratteliDiagram::new(incoming);
    if let Some(v) = d.validate().first() {
        return Err(FormatError(format!("levels[{}]: {}", v.level, v.message)));
    }
    Ok(d)
}

pub fn write_diagram(d: &OrderedBratteliDiagram) -> String {
    let mut levels = vec![DiagramLevelJson {
        size: 1,
        incoming: None,
    }];
    for k in 1..=d.depth() {
        levels.push(DiagramLevelJson {
            size: d.size(k),
            incoming: Some((1..=d.size(k)).map(|v| d.incoming(k, v).to_vec()).collect()),
        });
    }
    serde_json::to_string(&DiagramJson {
        kind: "bratteli".into(),
        levels,
    })
    .expect("serializable")
        + "\n"
}

pub fn parse_sadic(text: &str) -> Res<DirectiveSequence> {
    let j: SadicJson = serde_json::from_str(text).map_err(json_err)?;
    expect_kind(&j.kind, "sadic")?;
    if j.alphabets.len() != j.morphisms.len() + 1 {
        return Err(FormatError(format!(
            "field \"alphabets\": {} sizes given for {} morphisms (need one more)",
            j.alphabets.len(),
            j.morphisms.len()
        )));
    }
    let morphisms = j
        .morphisms
        .into_iter()
        .enumerate()
        .map(|(i, m)| Morphism::new(j.alphabets[i], m.rules).map_err(|e| FormatError(format!("morphisms[{i}]: {e}"))))
        .collect::<Res<Vec<_>>>()?;
    let schedule = j.schedule.map_or(Schedule::Explicit, Schedule::from);
    DirectiveSequence::new(j.alphabets, morphisms, schedule).map_err(|e| FormatError(e.to_string()))
}

pub fn write_sadic(ds: &DirectiveSequence) -> String {
    let j = SadicJson {
        kind: "sadic".into(),
        alphabets: ds.alphabets.clone(),
        morphisms: ds
            .morphisms
            .iter()
            .map(|m| MorphismJson { rules: m.rules.clone() })
            .collect(),
        schedule: match ds.schedule {
            Schedule::Explicit => None,
            s => Some(s.into()),
        },
    };
    serde_json::to_string(&j).expect("serializable") + "\n"
}

pub fn write_document(doc: &Document) -> String {
    match doc {
        Document::Construction(c) => write_construction(c),
        Document::Diagram(d) => write_diagram(d),
        Document::Sadic(s) => write_sadic(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHACON: &str = r#"{"kind":"rank_construction","arity0":1,"steps":[{"buildings":[[[1,0],[1,1],[1,null]]]}],"schedule":{"type":"periodic","cycle_len":1}}"#;
    const TWO_TOWER: &str = r#"{"kind":"bratteli","levels":[{"size":1},{"size":2,"incoming":[[1,1,1],[1,1]]}]}"#;
    const TM: &str = r#"{"kind":"sadic","alphabets":[2,2],"morphisms":[{"rules":[[1,2],[2,1]]}]}"#;

    #[test]
    fn documented_layouts_are_canonical() {
        for text in [CHACON, TWO_TOWER, TM] {
            let doc = parse_document(text).unwrap();
            assert_eq!(write_document(&doc), format!("{text}\n"));
        }
        let c = parse_construction(CHACON).unwrap();
        assert_eq!(c.expand(2, 1).unwrap().to_string(), "0010001010010");
    }

    #[test]
    fn diagnostics_name_the_place() {
        let e = parse_construction("{\"kind\":\"rank_construction\",\n\"arity0\":\"x\"}").unwrap_err();
        assert!(e.0.contains("line 2"), "{e}");
        let e = parse_diagram(r#"{"kind":"bratteli","levels":[{"size":1},{"size":3,"incoming":[[1]]}]}"#).unwrap_err();
        assert!(e.0.contains("levels[1]"), "{e}");
        let e = parse_document(r#"{"kind":"other"}"#).unwrap_err();
        assert!(e.0.contains("kind"));
        let e = parse_construction(r#"{"kind":"rank_construction","arity0":1,"steps":[{"buildings":[[[2,0],[1,null]]]}],"schedule":{"type":"explicit"}}"#)
            .unwrap_err();
        assert!(e.0.contains("invalid construction"));
    }
}
