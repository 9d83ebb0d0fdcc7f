//! CSV rendering. Numbers carry 17 significant digits so every value
//! round-trips to the identical f64; lines end with LF.

use spinpair::{PhaseRaster, SweepResult};

fn field(v: f64) -> String {
    format!("{v:.16e}")
}

/// One header row naming the swept parameter(s) plus `concurrence`, then
/// one row per grid point. 2D grids are row-major with the x axis fastest,
/// matching the in-memory value layout.
pub fn render_sweep(result: &SweepResult) -> String {
    let mut out = String::new();
    match result.axes.as_slice() {
        [axis] => {
            out.push_str(&format!("{},concurrence\n", axis.param.name()));
            for i in 0..axis.steps {
                out.push_str(&field(axis.value_at(i)));
                out.push(',');
                out.push_str(&field(result.values[i]));
                out.push('\n');
            }
        }
        [ax, ay] => {
            out.push_str(&format!("{},{},concurrence\n", ax.param.name(), ay.param.name()));
            for iy in 0..ay.steps {
                for ix in 0..ax.steps {
                    out.push_str(&field(ax.value_at(ix)));
                    out.push(',');
                    out.push_str(&field(ay.value_at(iy)));
                    out.push(',');
                    out.push_str(&field(result.values[iy * ax.steps + ix]));
                    out.push('\n');
                }
            }
        }
        _ => unreachable!("sweep results carry one or two axes"),
    }
    out
}

/// Ground-state raster: cell centers and the winning label, row-major.
pub fn render_phase(raster: &PhaseRaster) -> String {
    let mut out = format!(
        "{},{},label\n",
        raster.x_axis.param.name(),
        raster.y_axis.param.name()
    );
    for iy in 0..raster.ny {
        for ix in 0..raster.nx {
            out.push_str(&field(raster.x_axis.center(ix, raster.nx)));
            out.push(',');
            out.push_str(&field(raster.y_axis.center(iy, raster.ny)));
            out.push(',');
            out.push_str(raster.cells[iy * raster.nx + ix].label.name());
            out.push('\n');
        }
    }
    out
}
