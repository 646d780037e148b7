//! Checks a design against the charging-robot requirement list (a)–(k).
//!
//! Only the kinematic items are evaluated: (b) insertion depth, (c) plug
//! standoff, (d) the 200 mm regular workspace and (e) the number of degrees
//! of freedom. The rest depend on hardware, cabling or the vision loop and
//! are reported as not evaluable.

use std::fmt;
use std::path::PathBuf;

use crate::design::DesignParams;
use crate::error::{Error, Result};
use crate::placement::{max_inscribed_with, InscribedSquare, LameExponent, SearchSettings};
use crate::workspace::Workspace;

/// Side of the required square regular workspace, mm.
pub const REQUIRED_SQUARE_SIDE: f64 = 200.0;
/// Nominal insertion depth plus its upper tolerance, mm.
pub const REQUIRED_INSERTION_STROKE: f64 = 40.0 + 20.0;
/// Plug–socket standoff plus its upper tolerance, mm.
pub const REQUIRED_STANDOFF: f64 = 20.0 + 10.0;
pub const REQUIRED_DOF: f64 = 3.0;
/// Exponent used to approximate the square.
pub const SQUARE_EXPONENT: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotEvaluable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotEvaluable => "not evaluable",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RequirementRow {
    /// Source requirement letter, `'a'..='k'`.
    pub letter: char,
    pub title: &'static str,
    pub status: Status,
    pub measured: Option<f64>,
    pub required: Option<f64>,
    pub unit: &'static str,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyReport {
    pub design: DesignParams,
    pub rows: Vec<RequirementRow>,
    /// Largest regular workspace found for (d), when the region is not empty.
    pub inscribed: Option<InscribedSquare>,
    pub artifacts: Vec<PathBuf>,
}

impl StudyReport {
    pub fn row(&self, letter: char) -> Option<&RequirementRow> {
        self.rows.iter().find(|r| r.letter == letter)
    }
}

impl fmt::Display for StudyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.design;
        writeln!(
            f,
            "design: L={} L2={} L3={} strokes rho1=[{}, {}] rho2=[{}, {}] rho3=[{}, {}] theta={}",
            d.l, d.l2, d.l3, d.rho1_min, d.rho1_max, d.rho2_min, d.rho2_max, d.rho3_min, d.rho3_max, d.theta
        )?;
        if let Some(sq) = &self.inscribed {
            writeln!(
                f,
                "regular workspace: n={} l_b={:.3} mm (side {:.3} mm) at ({:.3}, {:.3})",
                sq.n,
                sq.l_b,
                2.0 * sq.l_b,
                sq.x_c,
                sq.y_c
            )?;
        }
        for r in &self.rows {
            write!(f, "({}) {:<28} {:<14}", r.letter, r.title, r.status.to_string())?;
            let unit = if r.unit.is_empty() { String::new() } else { format!(" {}", r.unit) };
            match (r.measured, r.required) {
                (Some(m), Some(q)) => write!(f, " measured {m:.3}{unit} vs required {q:.3}{unit}")?,
                (Some(m), None) => write!(f, " measured {m:.3}{unit}")?,
                _ => {}
            }
            if !r.note.is_empty() {
                write!(f, " -- {}", r.note)?;
            }
            writeln!(f)?;
        }
        for path in &self.artifacts {
            writeln!(f, "wrote {}", path.display())?;
        }
        Ok(())
    }
}

fn not_evaluable(letter: char, title: &'static str, note: &str) -> RequirementRow {
    RequirementRow {
        letter,
        title,
        status: Status::NotEvaluable,
        measured: None,
        required: None,
        unit: "",
        note: note.to_string(),
    }
}

fn compare(letter: char, title: &'static str, measured: f64, required: f64, unit: &'static str, note: String) -> RequirementRow {
    RequirementRow {
        letter,
        title,
        status: if measured >= required { Status::Pass } else { Status::Fail },
        measured: Some(measured),
        required: Some(required),
        unit,
        note,
    }
}

/// Evaluates every requirement. `tolerance` is the bisection tolerance for
/// the regular-workspace search, mm.
pub fn check_requirements(p: &DesignParams, tolerance: f64, settings: SearchSettings) -> Result<StudyReport> {
    p.validate()?;
    let stroke3 = p.rho3_max - p.rho3_min;
    let n = LameExponent::new(SQUARE_EXPONENT)?;
    let ws = Workspace::accessible(*p);
    let (inscribed, square_row) = match max_inscribed_with(&ws, n, tolerance, settings) {
        Ok(sq) => {
            let row = compare(
                'd',
                "regular workspace 200x200",
                2.0 * sq.l_b,
                REQUIRED_SQUARE_SIDE,
                "mm",
                format!("l_b_max = {:.3} mm (half-side), n = {}", sq.l_b, n),
            );
            (Some(sq), row)
        }
        Err(Error::DegenerateRegion) => (
            None,
            compare(
                'd',
                "regular workspace 200x200",
                0.0,
                REQUIRED_SQUARE_SIDE,
                "mm",
                "l_b_max = 0 (empty workspace)".into(),
            ),
        ),
        Err(e) => return Err(e),
    };

    let rows = vec![
        not_evaluable('a', "insertion force 70 N", "force is a hardware property; no dynamics model"),
        compare(
            'b',
            "insertion depth 40 +/-20 mm",
            stroke3,
            REQUIRED_INSERTION_STROKE,
            "mm",
            "rho3 stroke against depth plus upper tolerance".into(),
        ),
        compare(
            'c',
            "plug standoff 20 +10 mm",
            stroke3,
            REQUIRED_STANDOFF,
            "mm",
            "rho3 stroke against standoff plus upper tolerance".into(),
        ),
        square_row,
        compare('e', "degrees of freedom 3", 3.0, REQUIRED_DOF, "", "two planar sliders plus the insertion slider".into()),
        not_evaluable('f', "location accuracy 0.5 mm", "depends on the physical robot and the vision loop"),
        not_evaluable('g', "cable length 1500 mm", "cabling is outside the kinematic model"),
        not_evaluable('h', "cable weight 1.4 kg", "cabling is outside the kinematic model"),
        not_evaluable('i', "plug diameter 65 mm", "plug geometry is outside the kinematic model"),
        not_evaluable('j', "robot weight 10 kg", "mass is not modelled"),
        not_evaluable('k', "occupied space 1500x200 mm^2", "needs the full CAD envelope"),
    ];
    Ok(StudyReport {
        design: *p,
        rows,
        inscribed,
        artifacts: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast() -> SearchSettings {
        SearchSettings { samples: 256, grid: 32 }
    }

    #[test]
    fn stroke_items_for_prototype() {
        let r = check_requirements(&DesignParams::zoe(), 2.0, fast()).unwrap();
        assert_eq!(r.row('b').unwrap().status, Status::Pass);
        assert_eq!(r.row('c').unwrap().status, Status::Pass);
        assert_eq!(r.row('e').unwrap().status, Status::Pass);
        for letter in ['a', 'f', 'g', 'h', 'i', 'j', 'k'] {
            assert_eq!(r.row(letter).unwrap().status, Status::NotEvaluable, "{letter}");
        }
        assert_eq!(r.rows.len(), 11);
    }

    #[test]
    fn short_insertion_stroke_fails() {
        let mut p = DesignParams::zoe();
        p.rho3_max = 30.0;
        let r = check_requirements(&p, 2.0, fast()).unwrap();
        let b = r.row('b').unwrap();
        assert_eq!(b.status, Status::Fail);
        assert_eq!((b.measured, b.required), (Some(30.0), Some(60.0)));
    }

    #[test]
    fn empty_workspace_fails_square() {
        let mut p = DesignParams::zoe();
        p.rho1_max = 0.0;
        p.rho2_max = 0.0;
        p.l2 = 2000.0;
        let r = check_requirements(&p, 2.0, fast()).unwrap();
        let d = r.row('d').unwrap();
        assert_eq!(d.status, Status::Fail);
        assert_eq!(d.measured, Some(0.0));
        assert!(r.to_string().contains("(d)"));
    }
}
