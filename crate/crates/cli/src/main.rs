//! `evcharge`: kinematics, workspace and placement queries for the charging
//! robot. Lengths are millimetres, angles radians.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evcharge_kin::alpha::{alpha_fk, alpha_ik};
use evcharge_kin::design::{Assembly, Branch};
use evcharge_kin::gamma::{gamma_fk, gamma_ik};
use evcharge_kin::placement::{placement_region_with, LameExponent, LamePlacement, SearchSettings};
use evcharge_kin::requirements::{check_requirements, Status, SQUARE_EXPONENT};
use evcharge_kin::svg::{placement_svg, workspace_svg, LameOverlay};
use evcharge_kin::trajectory::{plan_insertion, plan_line, DEFAULT_MARGIN_FLOOR};
use evcharge_kin::{load_design, validate_joints, DesignParams, ErrorKind, JointVector, PlanarPose, SpatialPose, WorkingMode, Workspace};

const AFTER_HELP: &str = "Units: lengths in mm, angles in rad. \
The regular workspace is the Lamé curve |x-x_c|^n + |y-y_c|^n = l_b^n; \
l_b is the HALF-side, so a 200 mm square is l_b = 100.\n\
Exit codes: 0 ok, 1 negative answer, 2 usage/input, 3 unreachable, \
4 stroke limit, 5 singularity, 6 degenerate workspace, 7 I/O.";

#[derive(Parser)]
#[clap(name = "evcharge", version, about, after_help = AFTER_HELP)]
struct Cli {
    /// Design file (`key = value` lines, mm and rad). Defaults to the built
    /// prototype.
    #[clap(long, global = true)]
    config: Option<PathBuf>,

    #[clap(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Joint strokes for a tool-centre-point pose.
    ///
    /// With --z the full spatial target is solved (rho1, rho2, rho3);
    /// without it only the planar stage (rho1, rho2).
    #[clap(after_help = AFTER_HELP)]
    Ik {
        /// Target x, mm.
        #[clap(long, allow_hyphen_values = true)]
        x: f64,
        /// Target y, mm.
        #[clap(long, allow_hyphen_values = true)]
        y: f64,
        /// Target z, mm. Selects the spatial problem.
        #[clap(long, allow_hyphen_values = true)]
        z: Option<f64>,
        #[clap(flatten)]
        mode: ModeArgs,
    },
    /// Pose for given joint strokes.
    #[clap(after_help = AFTER_HELP)]
    Fk {
        /// Left slider stroke, mm.
        #[clap(long, allow_hyphen_values = true)]
        rho1: f64,
        /// Right slider stroke, mm.
        #[clap(long, allow_hyphen_values = true)]
        rho2: f64,
        /// Insertion stroke, mm. Selects the spatial problem.
        #[clap(long, allow_hyphen_values = true)]
        rho3: Option<f64>,
        /// Assembly: tool point above (upper) or below (lower) the line
        /// through the two arm pivots.
        #[clap(long, value_enum, default_value = "upper")]
        branch: AssemblyArg,
    },
    /// Boundary of the reachable planar workspace.
    ///
    /// Prints area and bounding box; optionally writes the boundary as CSV
    /// (`loop,index,x,y,constraint`) and an SVG drawn in mm with the
    /// parallel-singularity curves dashed.
    #[clap(after_help = AFTER_HELP)]
    Workspace {
        /// Samples per boundary arc and grid size for the singularity
        /// curves. At least 32.
        #[clap(long, default_value_t = 128)]
        grid: usize,
        #[clap(long)]
        csv: Option<PathBuf>,
        #[clap(long)]
        svg: Option<PathBuf>,
        /// Lamé curve to draw, `x_c,y_c,l_b,n` (mm, l_b the half-side).
        /// Repeatable.
        #[clap(long, allow_hyphen_values = true)]
        overlay: Vec<String>,
    },
    /// Centres where a Lamé curve of half-side l_b fits in the workspace.
    ///
    /// Scans a grid x grid lattice of centres over the workspace bounding
    /// box. Prints a witness centre, or `none` and exits 1.
    #[clap(after_help = AFTER_HELP)]
    Place {
        /// Half-side of the square-like curve, mm (200 mm square: 100).
        #[clap(long = "l-b")]
        l_b: f64,
        /// Even Lamé exponent, 2..=256.
        #[clap(long, default_value_t = SQUARE_EXPONENT)]
        n: u32,
        /// Lattice size per axis. At least 32.
        #[clap(long, default_value_t = 128)]
        grid: usize,
        /// Curve samples per containment check. At least 256.
        #[clap(long, default_value_t = 1024)]
        samples: usize,
        /// Raster CSV: `x,y,feasible,component,class`.
        #[clap(long)]
        csv: Option<PathBuf>,
        #[clap(long)]
        svg: Option<PathBuf>,
    },
    /// Evaluate the design requirements; exits 1 if any evaluable one fails.
    #[clap(after_help = AFTER_HELP)]
    CheckSpec {
        /// Bisection tolerance on l_b, mm.
        #[clap(long, default_value_t = 0.5)]
        tolerance: f64,
        #[clap(long, default_value_t = 128)]
        grid: usize,
        #[clap(long, default_value_t = 1024)]
        samples: usize,
        /// Workspace picture with the largest regular workspace drawn in.
        #[clap(long)]
        svg: Option<PathBuf>,
    },
    /// Joint-space waypoints for a straight Cartesian motion.
    #[clap(after_help = AFTER_HELP)]
    Plan {
        #[clap(subcommand)]
        motion: Motion,
    },
}

#[derive(Subcommand)]
enum Motion {
    /// Straight segment between two spatial poses.
    #[clap(after_help = AFTER_HELP)]
    Line {
        /// Start pose `x,y,z`, mm.
        #[clap(long, allow_hyphen_values = true)]
        from: SpatialPose,
        /// End pose `x,y,z`, mm.
        #[clap(long, allow_hyphen_values = true)]
        to: SpatialPose,
        #[clap(flatten)]
        common: PlanArgs,
        /// Smallest allowed |det A| / L^2 along the path.
        #[clap(long, default_value_t = DEFAULT_MARGIN_FLOOR)]
        margin_floor: f64,
    },
    /// Axial insertion ending at the socket.
    #[clap(after_help = AFTER_HELP)]
    Insert {
        /// Socket pose `x,y,z`, mm.
        #[clap(long, allow_hyphen_values = true)]
        socket: SpatialPose,
        /// Travel along the insertion axis, mm.
        #[clap(long)]
        depth: f64,
        #[clap(flatten)]
        common: PlanArgs,
    },
}

#[derive(Args)]
struct PlanArgs {
    /// Largest Cartesian spacing between waypoints, mm.
    #[clap(long, default_value_t = 1.0)]
    step: f64,
    /// Waypoint CSV (`index,x,y,z,rho1,rho2,rho3,parallel_margin`); stdout
    /// when absent.
    #[clap(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct ModeArgs {
    /// Inverse branch of the left arm.
    #[clap(long, value_enum, default_value = "minus")]
    left: BranchArg,
    /// Inverse branch of the right arm.
    #[clap(long, value_enum, default_value = "minus")]
    right: BranchArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Minus,
    Plus,
}

#[derive(Clone, Copy, ValueEnum)]
enum AssemblyArg {
    Upper,
    Lower,
}

impl ModeArgs {
    fn mode(&self) -> WorkingMode {
        let b = |a: BranchArg| match a {
            BranchArg::Minus => Branch::Minus,
            BranchArg::Plus => Branch::Plus,
        };
        WorkingMode {
            left: b(self.left),
            right: b(self.right),
            ..WorkingMode::default()
        }
    }
}

impl From<AssemblyArg> for Assembly {
    fn from(a: AssemblyArg) -> Self {
        match a {
            AssemblyArg::Upper => Assembly::Upper,
            AssemblyArg::Lower => Assembly::Lower,
        }
    }
}

/// Why a command stopped. Each variant owns one exit code.
#[derive(Debug)]
enum Failure {
    /// The command ran and the answer is "no".
    Negative,
    Kin(evcharge_kin::Error),
    Io(std::io::Error),
}

impl From<evcharge_kin::Error> for Failure {
    fn from(e: evcharge_kin::Error) -> Self {
        Failure::Kin(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn kind_name(kind: ErrorKind) -> &'static str {
    match kind {
        ErrorKind::Input => "input",
        ErrorKind::Unreachable => "unreachable",
        ErrorKind::Stroke => "stroke",
        ErrorKind::Singularity => "singularity",
        ErrorKind::Degenerate => "degenerate",
    }
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Input => 2,
        ErrorKind::Unreachable => 3,
        ErrorKind::Stroke => 4,
        ErrorKind::Singularity => 5,
        ErrorKind::Degenerate => 6,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Kin(e)) => {
            eprintln!("error[{}]: {e}", kind_name(e.kind()));
            ExitCode::from(exit_code(e.kind()))
        }
        Err(Failure::Io(e)) => {
            eprintln!("error[io]: {e}");
            ExitCode::from(7)
        }
    }
}

fn design(path: Option<&PathBuf>) -> Result<DesignParams, Failure> {
    let Some(path) = path else { return Ok(DesignParams::zoe()) };
    let text = fs::read_to_string(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    Ok(load_design(&text)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let p = design(cli.config.as_ref())?;
    match cli.command {
        Command::Ik { x, y, z, mode } => {
            let mode = mode.mode();
            match z {
                Some(z) => {
                    let q = gamma_ik(&p, SpatialPose::new(x, y, z), mode)?;
                    println!("rho1={:.6} rho2={:.6} rho3={:.6}", q.rho1, q.rho2, q.rho3.unwrap_or(0.0));
                }
                None => {
                    let q = alpha_ik(&p, PlanarPose::new(x, y), mode)?;
                    println!("rho1={:.6} rho2={:.6}", q.rho1, q.rho2);
                }
            }
        }
        Command::Fk { rho1, rho2, rho3, branch } => match rho3 {
            Some(rho3) => {
                let mode = WorkingMode::default().with_assembly(branch.into());
                let q = validate_joints(&p, JointVector::spatial(rho1, rho2, rho3))?.get();
                let pose = gamma_fk(&p, &q, mode)?;
                println!("x={:.6} y={:.6} z={:.6}", pose.x, pose.y, pose.z);
            }
            None => {
                let q = validate_joints(&p, JointVector::planar(rho1, rho2))?.get();
                let pose = alpha_fk(&p, &q, branch.into())?;
                println!("x={:.6} y={:.6}", pose.x, pose.y);
            }
        },
        Command::Workspace { grid, csv, svg, overlay } => {
            if grid < 32 {
                return Err(invalid(format!("grid must be at least 32, got {grid}")));
            }
            let overlays = overlay
                .iter()
                .map(|s| {
                    let c: LamePlacement = s.parse()?;
                    Ok(LameOverlay {
                        x_c: c.x_c,
                        y_c: c.y_c,
                        l_b: c.l_b,
                        n: c.n.get(),
                    })
                })
                .collect::<Result<Vec<_>, evcharge_kin::Error>>()?;
            let ws = Workspace::accessible(p);
            let region = ws.boundary(grid)?;
            let mut files = Vec::new();
            if let Some(path) = csv {
                files.push((path, region.to_csv()));
            }
            if let Some(path) = svg {
                let locus = ws.singularity_locus(grid)?;
                files.push((path, workspace_svg(&region, &locus, &overlays)));
            }
            output::write_all_atomic(&files)?;
            let b = region.bounds;
            println!("area={:.3} mm^2 loops={}", region.area(), region.loops.len());
            println!("bounds x=[{:.3}, {:.3}] y=[{:.3}, {:.3}]", b.min_x, b.max_x, b.min_y, b.max_y);
            report_written(&files);
        }
        Command::Place { l_b, n, grid, samples, csv, svg } => {
            let n = LameExponent::new(n)?;
            let ws = Workspace::accessible(p);
            let raster = placement_region_with(&ws, l_b, n, grid, samples)?;
            if raster.bounds.is_none() {
                return Err(evcharge_kin::Error::DegenerateRegion.into());
            }
            let mut files = Vec::new();
            if let Some(path) = csv {
                files.push((path, raster.to_csv()));
            }
            if let Some(path) = svg {
                let region = ws.boundary(grid).ok();
                files.push((path, placement_svg(region.as_ref(), &raster)));
            }
            output::write_all_atomic(&files)?;
            let feasible = raster.feasible_cells().count();
            println!("feasible cells: {feasible} of {}", raster.cells.len());
            report_written(&files);
            match raster.witness() {
                Some(w) => println!("witness x_c={:.3} y_c={:.3}", w.x, w.y),
                None => {
                    println!("none");
                    return Err(Failure::Negative);
                }
            }
        }
        Command::CheckSpec {
            tolerance,
            grid,
            samples,
            svg,
        } => {
            let settings = SearchSettings { samples, grid };
            let mut report = check_requirements(&p, tolerance, settings)?;
            if let Some(path) = svg {
                let ws = Workspace::accessible(p);
                let region = ws.boundary(grid)?;
                let locus = ws.singularity_locus(grid)?;
                let overlays: Vec<_> = report
                    .inscribed
                    .iter()
                    .map(|sq| LameOverlay {
                        x_c: sq.x_c,
                        y_c: sq.y_c,
                        l_b: sq.l_b,
                        n: sq.n.get(),
                    })
                    .collect();
                output::write_all_atomic(&[(path.clone(), workspace_svg(&region, &locus, &overlays))])?;
                report.artifacts.push(path);
            }
            print!("{report}");
            if report.rows.iter().any(|r| r.status == Status::Fail) {
                return Err(Failure::Negative);
            }
        }
        Command::Plan { motion } => {
            let (plan, common) = match motion {
                Motion::Line {
                    from,
                    to,
                    common,
                    margin_floor,
                } => (plan_line(&p, from, to, common.step, margin_floor)?, common),
                Motion::Insert { socket, depth, common } => (plan_insertion(&p, socket, depth, common.step)?, common),
            };
            match common.csv {
                Some(path) => {
                    let files = [(path, plan.to_csv())];
                    output::write_all_atomic(&files)?;
                    println!(
                        "waypoints={} min_parallel_margin={:.6} min_stroke_clearance={:.3}",
                        plan.waypoints.len(),
                        plan.min_parallel_margin,
                        plan.min_stroke_clearance
                    );
                    report_written(&files);
                }
                None => print!("{}", plan.to_csv()),
            }
        }
    }
    Ok(())
}

fn invalid(message: String) -> Failure {
    Failure::Kin(evcharge_kin::Error::InvalidArgument(message))
}

fn report_written(files: &[(PathBuf, String)]) {
    for (path, _) in files {
        println!("wrote {}", path.display());
    }
}

