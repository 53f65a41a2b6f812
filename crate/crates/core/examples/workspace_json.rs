//! Saving constructions to a JSON workspace and loading them back with every
//! table and recipe re-checked.
//!
//! cargo run --example workspace_json

use actforge::act::direct_product_act;
use actforge::family::{monoid_by_name, small_acts};
use actforge::suite::small_presentation;
use actforge::workspace::{load_workspace, save_workspace, Recipe, Workspace, WorkspaceError};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e2 = monoid_by_name("E2").expect("family monoid");
    let acts = small_acts(&e2, 2);
    let (a, b) = (&acts[2].value, &acts[1].value);
    let prod = direct_product_act(a, b)?;
    let p = small_presentation(&prod)?;

    let mut doc = actforge::workspace::WorkspaceDocument::default();
    doc.add_monoid("E2", &e2, Some(Recipe::new("chain", &[], Some(2))));
    doc.add_act("A", "E2", a, Some(Recipe::new("regular", &["E2"], None)));
    doc.add_act("B", "E2", b, Some(Recipe::new("trivial", &["E2"], Some(2))));
    doc.add_act("AxB", "E2", &prod, Some(Recipe::new("product", &["A", "B"], None)));
    doc.add_presentation("P", "E2", Some("AxB"), &p, Some(p.verify(&prod)), None);

    let dir = std::env::temp_dir().join("actforge-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("workspace.json");
    save_workspace(&path, &doc)?;
    let ws = load_workspace(&path)?;
    println!("saved and reloaded {} ({} acts)", path.display(), ws.acts.len());
    assert_eq!(std::fs::read_to_string(&path)?, ws.document.to_json());

    // A recipe that does not reproduce the stored table is rejected.
    let mut tampered = doc.clone();
    tampered.acts.get_mut("B").expect("present").recipe = Some(Recipe::new("regular", &["E2"], None));
    match Workspace::from_document(tampered) {
        Err(e @ WorkspaceError::RecipeMismatch { .. }) => println!("tampered recipe: {e}"),
        other => println!("unexpected: {other:?}"),
    }

    // So is an edited table that breaks the act law.
    let mut broken = doc;
    broken.acts.get_mut("A").expect("present").action[1][0] = 0;
    match Workspace::from_document(broken) {
        Err(e) => println!("edited table: {e}"),
        Ok(_) => println!("unexpected: edited table accepted"),
    }
    Ok(())
}
