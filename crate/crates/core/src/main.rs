use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use connectivity::adjunction::adjunction_verify;
use connectivity::conncat::{brunnian_order, conncat_generate, is_connective, monoid_check, object_connectivity};
use connectivity::device::{canonical_device, space_from_device};
use connectivity::dynamics::{xi, zeta};
use connectivity::dynamorphism::{check, solution_check};
use connectivity::error::{Error, Result};
use connectivity::interpretation::{associate_in, associate_out, interp_in_check, interp_out_check, interp_trans_check};
use connectivity::json::*;
use connectivity::order::order_report;
use connectivity::representation::{canonical_double, compose, phi, leaf_iso, r_down, r_up, Selector};
use connectivity::space::{self, generate, is_valid_structure, pe_of_structure, quotient, quotient_partial, saturate, structural_quotient};
use connectivity::subset;
use connectivity::tc::{av, essentialize, tc, verticalize};
use connectivity::{Foliation, Representation, Space};

#[derive(Parser)]
#[command(name = "connectivity", version, about = "Finite connectivity spaces, foliations, representations and dynamics")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct One {
    /// Input JSON file, `-` for stdin
    file: String,
}

#[derive(Args)]
struct Classes {
    file: String,
    /// JSON list of classes, e.g. `[[0,1],[2]]`
    #[arg(long)]
    classes: String,
}

#[derive(Args)]
struct Triple {
    /// Morphism JSON
    morphism: String,
    /// Source dynamics
    source: String,
    /// Target dynamics
    target: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a family is a connectivity structure
    Validate(One),
    /// Smallest structure containing the listed parts
    Generate {
        file: String,
        /// Also make every singleton connected
        #[arg(long)]
        integral: bool,
    },
    /// Connected components and absent points
    Components(One),
    /// Structure induced on a subset, re-indexed
    Induce {
        file: String,
        /// JSON list of points
        #[arg(long)]
        subset: String,
    },
    /// Quotient by a partition of all points
    Quotient(Classes),
    /// Quotient by classes covering part of the points
    QuotientPartial(Classes),
    /// Pullback of the quotient structure to the points
    StructuralQuotient(Classes),
    /// Every part of a connected part becomes connected
    Saturate(One),
    /// Whether a separation device separates a subset
    Separate {
        device: String,
        #[arg(long)]
        subset: String,
    },
    /// Structure of parts not separated by a device
    FromDevice(One),
    /// Canonical separation device of an integral space
    CanonicalDevice(One),
    /// Whether a point map between two spaces is connective
    MorphismCheck {
        source: String,
        target: String,
        /// JSON list, image of each point
        #[arg(long)]
        map: String,
    },
    /// Irreducible parts, longest chain and connectivity order
    Order(One),
    /// Leaves of a foliation
    Leaves(One),
    /// Leaf space of a foliation
    LeafSpace {
        file: String,
        /// Leaves connected when their union is externally connected
        #[arg(long, conflicts_with = "sortant")]
        entrant: bool,
        /// External structure quotiented by the leaves
        #[arg(long)]
        sortant: bool,
    },
    /// Check a representation
    RepValidate(One),
    /// Validity, clarity and distinctness of a representation
    RepClassify(One),
    /// Composite applying FIRST then SECOND
    RepCompose { first: String, second: String },
    /// Canonical double of a space
    Double(One),
    /// Foliation of a representation's ambient
    Phi {
        file: String,
        /// Selector for non-connected points: D, K or G
        #[arg(long, default_value = "K")]
        gamma0: String,
        /// Selector for connected points: D, K or G
        #[arg(long, default_value = "K")]
        gamma1: String,
    },
    /// Leaf representation over the induced leaf space
    Rdown(One),
    /// Leaf representation over the quotient leaf space
    Rup(One),
    /// Compare both hom-sets of the leaf/foliation correspondence
    AdjunctionVerify { foliation: String, representation: String },
    /// Isomorphism onto the leaf representation of the grossier foliation
    #[command(name = "leaf-iso", visible_alias = "prop18")]
    LeafIso(One),
    /// Check the category laws
    CatValidate(One),
    /// Check the functor laws of a dynamics
    DynValidate(One),
    /// Single-state dynamics of a category
    Zeta(One),
    /// Arrow dynamics of a category
    Xi(One),
    /// Reachability preorder on the states
    Preorder(One),
    /// States reached from one state along one arrow
    Orbit {
        file: String,
        #[arg(long)]
        state: String,
    },
    /// Category of transitions
    Tc(One),
    /// Single-state dynamics over the transitions
    Essentialize(One),
    /// Transitions of the arrow dynamics
    Verticalize(One),
    /// Projection from the essential dynamics
    Av(One),
    /// Check a dynamorphism between two dynamics
    DynamorphismCheck(Triple),
    /// Check a solution out of a deterministic proper dynamics
    SolutionCheck(Triple),
    /// Check an incoming interpretation (morphism, underlying, observed)
    InterpIn(Triple),
    /// Check an outgoing interpretation (morphism, observed, underlying)
    InterpOut(Triple),
    /// Build and check the associated interpretation
    InterpAssociate {
        morphism: String,
        source: String,
        target: String,
        #[arg(long, conflicts_with = "sortante")]
        entrante: bool,
        #[arg(long)]
        sortante: bool,
    },
    /// Check an interpretation across categories
    InterpTrans(Triple),
    /// Check that an arrow structure is stable under composition
    ConncatValidate(One),
    /// Least connective arrow structure containing the listed sets
    ConncatGenerate {
        file: String,
        #[arg(long)]
        integral: bool,
    },
    /// Order of the structure generated by all arrows
    BrunnianOrder(One),
    /// Connectivity of a structure on a monoid
    MonoidCheck(One),
    /// Structure on objects induced by the arrows
    ObjectConnectivity(One),
    /// Foliation of the states of a connective dynamics
    DynFoliation(One),
    /// Order of a connective dynamics
    DynOrder(One),
}

fn read(path: &str) -> Result<Value> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn base(path: &str) -> PathBuf {
    if path == "-" {
        PathBuf::from(".")
    } else {
        Path::new(path).parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."))
    }
}

fn parse_arg<T: for<'de> serde::Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("argument {text:?}: {e}")))
}

fn space(path: &str) -> Result<Space> {
    from_value::<SpaceJson>(read(path)?)?.to_space()
}

fn foliation(path: &str) -> Result<Foliation> {
    from_value::<FoliationJson>(read(path)?)?.to_foliation()
}

fn representation(path: &str) -> Result<Representation> {
    from_value::<RepresentationJson>(read(path)?)?.to_representation()
}

fn category(path: &str) -> Result<connectivity::fincat::FinCat> {
    from_value::<CategoryInput>(read(path)?)?.to_category()
}

fn valid_category(path: &str) -> Result<connectivity::fincat::FinCat> {
    let c = category(path)?;
    c.require_valid()?;
    Ok(c)
}

fn dynamics(path: &str) -> Result<connectivity::dynamics::Dynamics> {
    let d = from_value::<DynamicsJson>(read(path)?)?.to_dynamics(&base(path))?;
    d.require_valid()?;
    Ok(d)
}

fn dynamorphism(
    path: &str,
    a: &connectivity::dynamics::Dynamics,
    b: &connectivity::dynamics::Dynamics,
) -> Result<connectivity::dynamorphism::Dynamorphism> {
    from_value::<DynamorphismJson>(read(path)?)?.to_dynamorphism(a, b)
}

fn foliation_value(z: &Foliation) -> Value {
    let mut v = to_value(&FoliationJson::from_foliation(z));
    v["leaves"] = subsets_value(&z.leaves());
    v["regular"] = json!(z.is_regular());
    v
}

fn rep_value(r: &Representation) -> Value {
    to_value(&RepresentationJson::from_representation(r))
}

fn run(cmd: Cmd) -> Result<(bool, Value)> {
    Ok(match cmd {
        Cmd::Validate(a) => {
            let s: SpaceJson = from_value(read(&a.file)?)?;
            let valid = is_valid_structure(s.points, &s.family()?);
            (valid, json!({ "valid": valid }))
        }
        Cmd::Generate { file, integral } => {
            let s: SpaceJson = from_value(read(&file)?)?;
            (true, space_value(&generate(s.points, &s.family()?, integral || s.integral)?))
        }
        Cmd::Components(a) => {
            let x = space(&a.file)?;
            (true, json!({ "components": subsets_value(&x.components()), "absent": subset::to_vec(x.absent()) }))
        }
        Cmd::Induce { file, subset: sub } => {
            let x = space(&file)?;
            let a = subset::from_indices(x.points(), &parse_arg::<Vec<usize>>(&sub)?)?;
            (true, space_value(&x.induce(a)?))
        }
        Cmd::Quotient(c) => (true, space_value(&quotient(&space(&c.file)?, &parse_arg::<Vec<Vec<usize>>>(&c.classes)?)?)),
        Cmd::QuotientPartial(c) => (true, space_value(&quotient_partial(&space(&c.file)?, &parse_arg::<Vec<Vec<usize>>>(&c.classes)?)?)),
        Cmd::StructuralQuotient(c) => (true, space_value(&structural_quotient(&space(&c.file)?, &parse_arg::<Vec<Vec<usize>>>(&c.classes)?)?)),
        Cmd::Saturate(a) => {
            let x = space(&a.file)?;
            let mut v = space_value(&saturate(&x)?);
            v["classes"] = json!(pe_of_structure(&x).class_lists());
            (true, v)
        }
        Cmd::Separate { device, subset: sub } => {
            let d = from_value::<DeviceJson>(read(&device)?)?.to_device()?;
            let a = subset::from_indices(d.points(), &parse_arg::<Vec<usize>>(&sub)?)?;
            (true, json!({ "separated": d.separates(a) }))
        }
        Cmd::FromDevice(a) => (true, space_value(&space_from_device(&from_value::<DeviceJson>(read(&a.file)?)?.to_device()?)?)),
        Cmd::CanonicalDevice(a) => {
            let x = space(&a.file)?;
            (true, to_value(&DeviceJson::from_device(&canonical_device(&x)?)))
        }
        Cmd::MorphismCheck { source, target, map } => {
            let ok = space::is_morphism(&space(&source)?, &space(&target)?, &parse_arg::<Vec<usize>>(&map)?)?;
            (ok, json!({ "morphism": ok }))
        }
        Cmd::Order(a) => (true, to_value(&order_report(&space(&a.file)?))),
        Cmd::Leaves(a) => {
            let z = foliation(&a.file)?;
            (true, json!({ "leaves": subsets_value(&z.leaves()), "regular": z.is_regular() }))
        }
        Cmd::LeafSpace { file, entrant, sortant } => {
            let z = foliation(&file)?;
            if !entrant && !sortant {
                return Err(Error::Input("one of --entrant or --sortant is required".into()));
            }
            (true, space_value(&if entrant { z.leaf_space_induced()? } else { z.leaf_space_quotient()? }))
        }
        Cmd::RepValidate(a) => {
            let ok = representation(&a.file)?.is_valid();
            (ok, json!({ "valid": ok }))
        }
        Cmd::RepClassify(a) => {
            let r = representation(&a.file)?;
            (true, json!({ "valid": r.is_valid(), "clear": r.is_clear()?, "distinct": r.is_distinct() }))
        }
        Cmd::RepCompose { first, second } => (true, rep_value(&compose(&representation(&second)?, &representation(&first)?)?)),
        Cmd::Double(a) => (true, rep_value(&canonical_double(&space(&a.file)?)?)),
        Cmd::Phi { file, gamma0, gamma1 } => {
            let r = representation(&file)?;
            (true, foliation_value(&phi(&r, gamma0.parse::<Selector>()?, gamma1.parse::<Selector>()?)?))
        }
        Cmd::Rdown(a) => (true, rep_value(&r_down(&foliation(&a.file)?)?)),
        Cmd::Rup(a) => (true, rep_value(&r_up(&foliation(&a.file)?)?)),
        Cmd::AdjunctionVerify { foliation: f, representation: r } => {
            let rep = adjunction_verify(&foliation(&f)?, &representation(&r)?)?;
            (rep.bijection, to_value(&rep))
        }
        Cmd::LeafIso(a) => {
            let iso = leaf_iso(&representation(&a.file)?)?;
            (
                true,
                json!({
                    "target": rep_value(&iso.target),
                    "forward": to_value(&RepMorphismJson::from(&iso.forward)),
                    "backward": to_value(&RepMorphismJson::from(&iso.backward)),
                }),
            )
        }
        Cmd::CatValidate(a) => {
            let c = category(&a.file)?;
            let v = c.violation();
            (v.is_none(), json!({ "valid": v.is_none(), "violation": v }))
        }
        Cmd::DynValidate(a) => {
            let d = from_value::<DynamicsJson>(read(&a.file)?)?.to_dynamics(&base(&a.file))?;
            let v = d.violation();
            (v.is_none(), json!({ "valid": v.is_none(), "proper": d.is_proper(), "violation": v }))
        }
        Cmd::Zeta(a) => (true, dynamics_value(&zeta(&valid_category(&a.file)?))),
        Cmd::Xi(a) => (true, dynamics_value(&xi(&valid_category(&a.file)?))),
        Cmd::Preorder(a) => {
            let d = dynamics(&a.file)?;
            let pairs: Vec<[String; 2]> =
                d.preorder()?.into_iter().map(|(x, y)| [d.names()[x].clone(), d.names()[y].clone()]).collect();
            (true, json!({ "pairs": pairs }))
        }
        Cmd::Orbit { file, state } => {
            let d = dynamics(&file)?;
            let s = d.state_index(&state).ok_or_else(|| Error::Input(format!("unknown state {state:?}")))?;
            let orbit: Vec<&String> = d.orbit(s).into_iter().map(|x| &d.names()[x]).collect();
            (true, json!({ "orbit": orbit }))
        }
        Cmd::Tc(a) => (true, category_value(&tc(&dynamics(&a.file)?)?)),
        Cmd::Essentialize(a) => (true, dynamics_value(&essentialize(&dynamics(&a.file)?)?)),
        Cmd::Verticalize(a) => (true, category_value(&verticalize(&valid_category(&a.file)?)?)),
        Cmd::Av(a) => {
            let d = dynamics(&a.file)?;
            let (ess, m) = av(&d)?;
            (
                true,
                json!({
                    "source": dynamics_value(&ess),
                    "morphism": to_value(&DynamorphismJson::from_dynamorphism(&m, &ess, &d)),
                }),
            )
        }
        Cmd::DynamorphismCheck(t) => {
            let (a, b) = (dynamics(&t.source)?, dynamics(&t.target)?);
            let r = check(&a, &b, &dynamorphism(&t.morphism, &a, &b)?)?;
            (r.valid, to_value(&r))
        }
        Cmd::SolutionCheck(t) => {
            let (a, b) = (dynamics(&t.source)?, dynamics(&t.target)?);
            let r = solution_check(&dynamorphism(&t.morphism, &a, &b)?, &a, &b)?;
            (r.solution, to_value(&r))
        }
        Cmd::InterpIn(t) => {
            let (a, b) = (dynamics(&t.source)?, dynamics(&t.target)?);
            let r = interp_in_check(&a, &b, &dynamorphism(&t.morphism, &a, &b)?)?;
            (r.entrante, to_value(&r))
        }
        Cmd::InterpOut(t) => {
            let (a, b) = (dynamics(&t.source)?, dynamics(&t.target)?);
            let r = interp_out_check(&a, &b, &dynamorphism(&t.morphism, &a, &b)?)?;
            (r.sortante, to_value(&r))
        }
        Cmd::InterpAssociate { morphism, source, target, entrante, sortante } => {
            let (a, b) = (dynamics(&source)?, dynamics(&target)?);
            let m = dynamorphism(&morphism, &a, &b)?;
            let r = match (entrante, sortante) {
                (true, _) => associate_in(&a, &b, &m)?,
                (_, true) => associate_out(&a, &b, &m)?,
                _ => return Err(Error::Input("one of --entrante or --sortante is required".into())),
            };
            let assoc = DynamorphismJson::from_dynamorphism(&r.associated, &b, &a);
            (r.mixte, json!({ "mixte": r.mixte, "reguliere": r.reguliere, "associated": to_value(&assoc) }))
        }
        Cmd::InterpTrans(t) => {
            let (a, b) = (dynamics(&t.source)?, dynamics(&t.target)?);
            let r = interp_trans_check(&a, &b, &dynamorphism(&t.morphism, &a, &b)?)?;
            (r.interpretation, to_value(&r))
        }
        Cmd::ConncatValidate(a) => {
            let j: ConnCatJson = from_value(read(&a.file)?)?;
            let c = j.category.to_category()?;
            c.require_valid()?;
            let ok = is_connective(&c, &arrow_family(&c, &j.arrow_connected, j.integral)?);
            (ok, json!({ "connective": ok }))
        }
        Cmd::ConncatGenerate { file, integral } => {
            let j: ConnCatJson = from_value(read(&file)?)?;
            let c = j.category.to_category()?;
            c.require_valid()?;
            let s = conncat_generate(&c, &arrow_family(&c, &j.arrow_connected, false)?, integral || j.integral)?;
            let names: Vec<String> = c.arrows().iter().map(|x| x.name.clone()).collect();
            (true, json!({ "arrow_connected": named_lists(&names, s.connected()), "integral": s.is_integral() }))
        }
        Cmd::BrunnianOrder(a) => (true, json!({ "order": brunnian_order(&valid_category(&a.file)?)? })),
        Cmd::MonoidCheck(a) => {
            let (m, fam) = from_value::<MonoidCheckJson>(read(&a.file)?)?.parse()?;
            let r = monoid_check(&m, &fam)?;
            (r.connective, to_value(&r))
        }
        Cmd::ObjectConnectivity(a) => {
            let c = valid_category(&a.file)?;
            let s = object_connectivity(&c)?;
            (true, json!({ "objects": c.objects(), "connected": named_lists(c.objects(), s.connected()), "space": space_value(&s) }))
        }
        Cmd::DynFoliation(a) => {
            let cd = from_value::<ConnDynamicsJson>(read(&a.file)?)?.to_conn_dynamics(&base(&a.file))?;
            let z = cd.foliation()?;
            let mut v = foliation_value(&z);
            v["states"] = json!(cd.dynamics().names());
            (true, v)
        }
        Cmd::DynOrder(a) => {
            let cd = from_value::<ConnDynamicsJson>(read(&a.file)?)?.to_conn_dynamics(&base(&a.file))?;
            let mut v = to_value(&cd.order()?);
            v["leaves"] = json!(cd.foliation()?.leaves().len());
            (true, v)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((ok, result)) => {
            println!("{}", json!({ "ok": ok, "result": result }));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!("{}", json!({ "ok": false, "error": e.to_string() }));
            eprintln!("error: {e}");
            match e {
                Error::Input(_) | Error::Capacity(_) => ExitCode::from(2),
                Error::Invalid(_) | Error::Domain(_) => ExitCode::from(1),
            }
        }
    }
}
