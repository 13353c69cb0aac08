//! SVG rendering of two-dimensional sets with their boundaries.
//!
//! Set points are drawn in one color, the extra boundary vertices in another,
//! on a light coordinate grid. Output is plain text and byte-deterministic
//! for a fixed input and style.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sets::PointSet;

/// Styling knobs for [`render_svg`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderStyle {
    /// Grid pitch in pixels.
    pub cell_px: u32,
    /// Fill color of set points.
    pub set_color: String,
    /// Fill color of boundary points outside the set.
    pub boundary_color: String,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            cell_px: 24,
            set_color: "blue".to_string(),
            boundary_color: "red".to_string(),
        }
    }
}

/// Renders a 2-D set and its vertex boundary. The empty set yields a small
/// empty grid around the origin.
pub fn render_svg(set: &PointSet, style: &RenderStyle) -> Result<String> {
    if set.sig().dims() != 2 {
        return Err(Error::NotTwoDimensional {
            dims: set.sig().dims(),
        });
    }
    let boundary = set.vertex_boundary();
    let (min_x, max_x, min_y, max_y) = if boundary.is_empty() {
        (-1, 1, -1, 1)
    } else {
        let xs = boundary.iter().map(|p| p.coords()[0]);
        let ys = boundary.iter().map(|p| p.coords()[1]);
        (
            xs.clone().min().unwrap(),
            xs.max().unwrap(),
            ys.clone().min().unwrap(),
            ys.max().unwrap(),
        )
    };

    let cell = style.cell_px as i64;
    let cols = max_x - min_x + 1;
    let rows = max_y - min_y + 1;
    let width = (cols + 2) * cell;
    let height = (rows + 2) * cell;
    // Lattice point (x, y) sits at the center of its cell, y axis pointing up.
    let px = |x: i64| (x - min_x + 1) * cell * 2 + cell; // doubled to keep halves integral
    let py = |y: i64| (max_y - y + 1) * cell * 2 + cell;
    let radius = (cell * 3) / 10;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {w2} {h2}\">",
        w2 = width * 2,
        h2 = height * 2,
    );
    let _ = writeln!(
        svg,
        "<rect width=\"{}\" height=\"{}\" fill=\"white\"/>",
        width * 2,
        height * 2
    );

    let _ = writeln!(svg, "<g stroke=\"#cccccc\" stroke-width=\"1\">");
    for x in min_x..=max_x {
        let cx = px(x);
        let _ = writeln!(
            svg,
            "<line x1=\"{cx}\" y1=\"{}\" x2=\"{cx}\" y2=\"{}\"/>",
            py(max_y) - cell,
            py(min_y) + cell,
        );
    }
    for y in min_y..=max_y {
        let cy = py(y);
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{cy}\" x2=\"{}\" y2=\"{cy}\"/>",
            px(min_x) - cell,
            px(max_x) + cell,
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, "<g fill=\"{}\">", style.boundary_color);
    for p in boundary.iter().filter(|p| !set.contains(p)) {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            px(p.coords()[0]),
            py(p.coords()[1]),
            radius * 2,
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, "<g fill=\"{}\">", style.set_color);
    for p in set.iter() {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            px(p.coords()[0]),
            py(p.coords()[1]),
            radius * 2,
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::DomainSignature;
    use crate::ordering::initial_segment;
    use crate::point;

    fn circles_in_group(svg: &str, color: &str) -> usize {
        let open = format!("<g fill=\"{color}\">");
        let start = svg.find(&open).expect("group present") + open.len();
        let end = svg[start..].find("</g>").expect("group closed") + start;
        svg[start..end].matches("<circle").count()
    }

    #[test]
    fn segment_of_ten_renders_ten_plus_eighteen() {
        let seg = initial_segment(DomainSignature::new(2, 0), 10).unwrap();
        let svg = render_svg(&seg, &RenderStyle::default()).unwrap();
        assert_eq!(circles_in_group(&svg, "blue"), 10);
        assert_eq!(circles_in_group(&svg, "red"), 18);
    }

    #[test]
    fn nat_singleton_clips_at_the_floor() {
        let sig = DomainSignature::new(0, 2);
        let s = PointSet::new(sig, vec![point![0, 0]]).unwrap();
        let svg = render_svg(&s, &RenderStyle::default()).unwrap();
        assert_eq!(circles_in_group(&svg, "blue"), 1);
        assert_eq!(circles_in_group(&svg, "red"), 3);
    }

    #[test]
    fn empty_set_gives_empty_grid() {
        let svg = render_svg(
            &PointSet::empty(DomainSignature::new(2, 0)),
            &RenderStyle::default(),
        )
        .unwrap();
        assert_eq!(svg.matches("<circle").count(), 0);
        assert!(svg.contains("<line"));
    }

    #[test]
    fn deterministic_and_dimension_checked() {
        let seg = initial_segment(DomainSignature::new(2, 0), 7).unwrap();
        let a = render_svg(&seg, &RenderStyle::default()).unwrap();
        let b = render_svg(&seg, &RenderStyle::default()).unwrap();
        assert_eq!(a, b);
        let line = PointSet::new(DomainSignature::new(1, 0), vec![point![0]]).unwrap();
        assert_eq!(
            render_svg(&line, &RenderStyle::default()),
            Err(Error::NotTwoDimensional { dims: 1 })
        );
    }
}
