use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use graphdyn_core::HybridArc;

/// Prints a real with 17 significant digits, enough to round-trip any f64.
fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

/// Sample indices to export from a segment of `len` samples: every
/// `stride`-th plus the final one, so jump boundaries always appear.
fn strided(len: usize, stride: usize) -> impl Iterator<Item = usize> {
    let last = len.saturating_sub(1);
    (0..len).step_by(stride.max(1)).chain(
        if last > 0 && last % stride.max(1) != 0 { Some(last) } else { None },
    )
}

/// Writes the four trajectory files into `dir`:
/// - `vertices.csv`: t, k, label, attribute
/// - `edges.csv`: t, k, from, to, weight, adjacency
/// - `dimension.csv`: t, k, basis_size
/// - `jumps.csv`: tau, k, case
///
/// Output is UTF-8 with `\n` line endings and is byte-deterministic for a
/// given arc and stride.
pub fn export_trajectory(arc: &HybridArc<f64>, dir: &Path, stride: usize) -> io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let open = |name: &str| -> io::Result<BufWriter<File>> {
        Ok(BufWriter::new(File::create(dir.join(name))?))
    };

    let mut vertices = open("vertices.csv")?;
    vertices.write_all(b"t,k,label,attribute\n")?;
    let mut edges = open("edges.csv")?;
    edges.write_all(b"t,k,from,to,weight,adjacency\n")?;
    let mut dimension = open("dimension.csv")?;
    dimension.write_all(b"t,k,basis_size\n")?;

    for seg in &arc.segments {
        let labels: Vec<u32> = seg.basis.iter().collect();
        let pairs: Vec<(u32, u32)> = seg.basis.square().iter().collect();
        let bits: Vec<u8> =
            pairs.iter().map(|&(p, q)| u8::from(seg.adjacency.is_set(p, q))).collect();
        for i in strided(seg.len(), stride) {
            let t = fmt_real(seg.time(i));
            writeln!(dimension, "{t},{k},{n}", k = seg.k, n = seg.dim())?;
            for (label, value) in labels.iter().zip(seg.x_row(i)) {
                writeln!(vertices, "{t},{k},{label},{v}", k = seg.k, v = fmt_real(*value))?;
            }
            for (((p, q), value), bit) in pairs.iter().zip(seg.w_row(i)).zip(&bits) {
                writeln!(
                    edges,
                    "{t},{k},{p},{q},{v},{bit}",
                    k = seg.k,
                    v = fmt_real(*value)
                )?;
            }
        }
    }

    let mut jumps = open("jumps.csv")?;
    jumps.write_all(b"tau,k,case\n")?;
    for j in &arc.jumps {
        writeln!(jumps, "{},{},{}", fmt_real(j.tau), j.k, j.case.as_str())?;
    }

    vertices.flush()?;
    edges.flush()?;
    dimension.flush()?;
    jumps.flush()
}
