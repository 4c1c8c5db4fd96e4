//! SVG, DOT and TikZ drawings of the plabic graph and of the quiver.
//!
//! Both targets are laid out once as a [`Scene`] in integer coordinates
//! (y grows downward) and then emitted in the requested format.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use plabic_seed::plabic::ColumnKind;
use plabic_seed::{Analysis, Error, Half};

const MARGIN: i64 = 40;
const DX: i64 = 60;
const DY: i64 = 50;
const CROSS: i64 = 20;
const GAP: i64 = 5;
const VERTEX_RADIUS: i64 = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Svg,
    Dot,
    Tikz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Plabic,
    Quiver,
}

type Point = (i64, i64);

#[derive(Clone, Debug)]
struct Line {
    from: Point,
    to: Point,
    dashed: bool,
    arrow: bool,
    label: Option<String>,
}

#[derive(Clone, Debug)]
enum Mark {
    /// Bridge endpoint.
    Dot { at: Point, white: bool },
    /// Quiver vertex.
    Vertex { at: Point, id: usize, frozen: bool },
    Text { at: Point, text: String },
    Shade { corner: Point, width: i64, height: i64 },
}

#[derive(Clone, Debug)]
struct Scene {
    title: String,
    width: i64,
    height: i64,
    shades: Vec<Mark>,
    lines: Vec<Line>,
    marks: Vec<Mark>,
}

pub fn render(an: &Analysis, format: Format, target: Target, film: Option<usize>) -> Result<String, Error> {
    let scene = match target {
        Target::Plabic => plabic_scene(an, film)?,
        Target::Quiver => {
            if film.is_some() {
                return Err(Error::Invalid("a film overlay applies to the plabic target only".into()));
            }
            quiver_scene(an)
        }
    };
    Ok(match format {
        Format::Svg => to_svg(&scene),
        Format::Tikz => to_tikz(&scene),
        Format::Dot if target == Target::Quiver => quiver_dot(an),
        Format::Dot => to_dot(&scene),
    })
}

fn level_y(n: usize, strand: usize) -> i64 {
    MARGIN + (n - strand) as i64 * DY
}

fn gap_y(n: usize, gap: usize) -> i64 {
    level_y(n, gap) - DY / 2
}

fn column_x(position: usize) -> i64 {
    MARGIN + position as i64 * DX
}

fn words(letters: &[usize]) -> String {
    letters.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn canvas(an: &Analysis) -> (i64, i64) {
    let n = an.diagram.n();
    (column_x(an.diagram.len() + 1) + MARGIN, level_y(n, 1) + MARGIN)
}

fn plabic_scene(an: &Analysis, film: Option<usize>) -> Result<Scene, Error> {
    let diagram = &an.diagram;
    let n = diagram.n();
    let len = diagram.len();
    let (width, height) = canvas(an);
    let mut scene = Scene {
        title: format!("plabic graph, n = {n}, beta = ({})", words(an.beta.letters())),
        width,
        height,
        shades: Vec::new(),
        lines: Vec::new(),
        marks: Vec::new(),
    };

    if let Some(k) = film {
        let overlay = an.films.films.iter().find(|f| f.vertex == k).ok_or(Error::UnknownVertex(k))?;
        for b in 0..=len {
            for gap in 1..n {
                if overlay.multiplicity_at(b, gap) > 0 {
                    scene.shades.push(Mark::Shade {
                        corner: (column_x(b), level_y(n, gap + 1)),
                        width: DX,
                        height: DY,
                    });
                }
            }
        }
    }

    let solid = |from: Point, to: Point| Line { from, to, dashed: false, arrow: false, label: None };
    for strand in 1..=n {
        let y = level_y(n, strand);
        let mut x = column_x(0);
        for col in diagram.columns() {
            let crossing = col.kind == ColumnKind::Crossing && (col.gap == strand || col.gap + 1 == strand);
            if crossing {
                let cx = column_x(col.position);
                scene.lines.push(solid((x, y), (cx - CROSS, y)));
                x = cx + CROSS;
            }
        }
        scene.lines.push(solid((x, y), (column_x(len + 1), y)));
    }

    for col in diagram.columns() {
        let x = column_x(col.position);
        let (low, high) = (level_y(n, col.gap), level_y(n, col.gap + 1));
        match col.kind {
            ColumnKind::Crossing => {
                // The strand rising to the right passes in front.
                scene.lines.push(solid((x - CROSS, low), (x + CROSS, high)));
                let mid = (low + high) / 2;
                scene.lines.push(solid((x - CROSS, high), (x - GAP, mid - GAP)));
                scene.lines.push(solid((x + GAP, mid + GAP), (x + CROSS, low)));
            }
            ColumnKind::Bridge => {
                scene.lines.push(solid((x, high), (x, low)));
                scene.marks.push(Mark::Dot { at: (x, high), white: true });
                scene.marks.push(Mark::Dot { at: (x, low), white: false });
            }
        }
    }

    for b in 0..=len {
        for gap in 1..n {
            let covering: Vec<String> = an
                .films
                .films
                .iter()
                .filter_map(|f| match f.multiplicity_at(b, gap) {
                    0 => None,
                    1 => Some(f.vertex.to_string()),
                    k => Some(format!("{}x{k}", f.vertex)),
                })
                .collect();
            if !covering.is_empty() {
                let at = (column_x(b) + DX / 2, gap_y(n, gap));
                scene.marks.push(Mark::Text { at, text: covering.join(",") });
            }
        }
    }
    Ok(scene)
}

fn vertex_positions(an: &Analysis) -> BTreeMap<usize, Point> {
    let n = an.diagram.n();
    an.films
        .films
        .iter()
        .map(|f| (f.vertex, (column_x(f.origin), gap_y(n, an.diagram.column(f.origin).gap))))
        .collect()
}

fn weight_label(weight: Half) -> Option<String> {
    match weight.halves() {
        1 | 2 => None,
        h if h % 2 == 0 => Some((h / 2).to_string()),
        _ => Some(weight.to_string()),
    }
}

fn shorten(from: Point, to: Point, by: i64) -> (Point, Point) {
    let (dx, dy) = ((to.0 - from.0) as f64, (to.1 - from.1) as f64);
    let len = (dx * dx + dy * dy).sqrt();
    if len <= 2.0 * by as f64 {
        return (from, to);
    }
    let (ux, uy) = (dx / len * by as f64, dy / len * by as f64);
    let at = |p: Point, s: f64| ((p.0 as f64 + s * ux).round() as i64, (p.1 as f64 + s * uy).round() as i64);
    (at(from, 1.0), at(to, -1.0))
}

fn quiver_scene(an: &Analysis) -> Scene {
    let (width, height) = canvas(an);
    let positions = vertex_positions(an);
    let mut lines = Vec::new();
    for arrow in &an.quiver.arrows {
        let (from, to) = shorten(positions[&arrow.source], positions[&arrow.target], VERTEX_RADIUS + 2);
        lines.push(Line { from, to, dashed: !arrow.weight.is_integer(), arrow: true, label: weight_label(arrow.weight) });
    }
    let marks = an
        .films
        .films
        .iter()
        .map(|f| Mark::Vertex { at: positions[&f.vertex], id: f.vertex, frozen: f.frozen })
        .collect();
    Scene {
        title: format!("quiver, m = {}, f = {}", an.m(), an.f()),
        width,
        height,
        shades: Vec::new(),
        lines,
        marks,
    }
}

fn to_svg(scene: &Scene) -> String {
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = scene.width,
        h = scene.height
    )
    .unwrap();
    writeln!(out, "<title>{}</title>", scene.title).unwrap();
    out.push_str(
        "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" \
         orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n",
    );
    for mark in &scene.shades {
        svg_mark(&mut out, mark);
    }
    for line in &scene.lines {
        let dash = if line.dashed { r#" stroke-dasharray="5,4""# } else { "" };
        let head = if line.arrow { r#" marker-end="url(#head)""# } else { "" };
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"{dash}{head}/>"#,
            line.from.0, line.from.1, line.to.0, line.to.1
        )
        .unwrap();
        if let Some(label) = &line.label {
            let (x, y) = ((line.from.0 + line.to.0) / 2, (line.from.1 + line.to.1) / 2 - 4);
            writeln!(out, r#"<text x="{x}" y="{y}" font-size="11" text-anchor="middle">{label}</text>"#).unwrap();
        }
    }
    for mark in &scene.marks {
        svg_mark(&mut out, mark);
    }
    out.push_str("</svg>\n");
    out
}

fn svg_mark(out: &mut String, mark: &Mark) {
    match mark {
        Mark::Dot { at, white } => {
            let fill = if *white { "white" } else { "black" };
            writeln!(out, r#"<circle cx="{}" cy="{}" r="5" fill="{fill}" stroke="black" stroke-width="1.5"/>"#, at.0, at.1)
                .unwrap();
        }
        Mark::Vertex { at, id, frozen } => {
            if *frozen {
                let r = VERTEX_RADIUS;
                writeln!(
                    out,
                    r#"<rect x="{}" y="{}" width="{}" height="{}" fill="lightgray" stroke="black"/>"#,
                    at.0 - r,
                    at.1 - r,
                    2 * r,
                    2 * r
                )
                .unwrap();
            } else {
                writeln!(out, r#"<circle cx="{}" cy="{}" r="{VERTEX_RADIUS}" fill="white" stroke="black"/>"#, at.0, at.1)
                    .unwrap();
            }
            writeln!(out, r#"<text x="{}" y="{}" font-size="11" text-anchor="middle">{id}</text>"#, at.0, at.1 + 4).unwrap();
        }
        Mark::Text { at, text } => {
            writeln!(
                out,
                r##"<text x="{}" y="{}" font-size="10" fill="#b03060" text-anchor="middle">{text}</text>"##,
                at.0,
                at.1 + 3
            )
            .unwrap();
        }
        Mark::Shade { corner, width, height } => {
            writeln!(
                out,
                r##"<rect x="{}" y="{}" width="{width}" height="{height}" fill="#a0522d" fill-opacity="0.35"/>"##,
                corner.0, corner.1
            )
            .unwrap();
        }
    }
}

fn to_tikz(scene: &Scene) -> String {
    let mut out = String::new();
    writeln!(out, "% {}", scene.title).unwrap();
    out.push_str("\\begin{tikzpicture}[x=0.02cm, y=-0.02cm]\n");
    for mark in &scene.shades {
        tikz_mark(&mut out, mark);
    }
    for line in &scene.lines {
        let mut opts = vec!["thick"];
        if line.dashed {
            opts.push("dashed");
        }
        if line.arrow {
            opts.push("->");
        }
        let label = line.label.as_ref().map(|l| format!(" node[midway, above] {{{l}}}")).unwrap_or_default();
        writeln!(
            out,
            "\\draw[{}] ({},{}) --{label} ({},{});",
            opts.join(", "),
            line.from.0,
            line.from.1,
            line.to.0,
            line.to.1
        )
        .unwrap();
    }
    for mark in &scene.marks {
        tikz_mark(&mut out, mark);
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn tikz_mark(out: &mut String, mark: &Mark) {
    match mark {
        Mark::Dot { at, white } => {
            let fill = if *white { "white" } else { "black" };
            writeln!(out, "\\node[circle, draw, fill={fill}, inner sep=1.5pt] at ({},{}) {{}};", at.0, at.1).unwrap();
        }
        Mark::Vertex { at, id, frozen } => {
            let shape = if *frozen { "rectangle, fill=lightgray" } else { "circle" };
            writeln!(out, "\\node[{shape}, draw] at ({},{}) {{{id}}};", at.0, at.1).unwrap();
        }
        Mark::Text { at, text } => {
            writeln!(out, "\\node[font=\\tiny, text=purple] at ({},{}) {{{text}}};", at.0, at.1).unwrap();
        }
        Mark::Shade { corner, width, height } => {
            writeln!(
                out,
                "\\fill[brown, opacity=0.35] ({},{}) rectangle ({},{});",
                corner.0,
                corner.1,
                corner.0 + width,
                corner.1 + height
            )
            .unwrap();
        }
    }
}

// Graphviz positions are in points with y growing upward.
fn dot_pos(scene: &Scene, p: Point) -> String {
    format!("{},{}!", p.0, scene.height - p.1)
}

fn to_dot(scene: &Scene) -> String {
    let mut out = String::new();
    out.push_str("graph plabic {\n");
    writeln!(out, "  label=\"{}\";", scene.title).unwrap();
    out.push_str("  node [shape=point, width=0.02];\n");
    let mut ids: BTreeMap<Point, usize> = BTreeMap::new();
    let mut nodes = String::new();
    let mut id_of = |p: Point, nodes: &mut String| -> usize {
        let next = ids.len();
        *ids.entry(p).or_insert_with(|| {
            writeln!(nodes, "  p{next} [pos=\"{}\"];", dot_pos(scene, p)).unwrap();
            next
        })
    };
    let mut edges = String::new();
    for line in &scene.lines {
        let (a, b) = (id_of(line.from, &mut nodes), id_of(line.to, &mut nodes));
        writeln!(edges, "  p{a} -- p{b};").unwrap();
    }
    out.push_str(&nodes);
    out.push_str(&edges);
    for (idx, mark) in scene.shades.iter().chain(&scene.marks).enumerate() {
        match mark {
            Mark::Dot { at, white } => {
                let fill = if *white { "white" } else { "black" };
                writeln!(
                    out,
                    "  m{idx} [shape=circle, width=0.12, style=filled, fillcolor={fill}, pos=\"{}\"];",
                    dot_pos(scene, *at)
                )
                .unwrap();
            }
            Mark::Text { at, text } => {
                writeln!(out, "  m{idx} [shape=plaintext, label=\"{text}\", fontsize=9, pos=\"{}\"];", dot_pos(scene, *at))
                    .unwrap();
            }
            Mark::Shade { corner, width, height } => {
                let center = (corner.0 + width / 2, corner.1 + height / 2);
                writeln!(
                    out,
                    "  m{idx} [shape=box, style=filled, fillcolor=\"#a0522d59\", color=none, width={:.3}, height={:.3}, label=\"\", pos=\"{}\"];",
                    *width as f64 / 72.0,
                    *height as f64 / 72.0,
                    dot_pos(scene, center)
                )
                .unwrap();
            }
            Mark::Vertex { .. } => {}
        }
    }
    out.push_str("}\n");
    out
}

fn quiver_dot(an: &Analysis) -> String {
    let positions = vertex_positions(an);
    let height = canvas(an).1;
    let mut out = String::new();
    out.push_str("digraph quiver {\n");
    writeln!(out, "  label=\"quiver, m = {}, f = {}\";", an.m(), an.f()).unwrap();
    for film in &an.films.films {
        let shape = if film.frozen { "box, style=filled, fillcolor=lightgray" } else { "circle" };
        let (x, y) = positions[&film.vertex];
        writeln!(out, "  {} [shape={shape}, pos=\"{x},{}!\"];", film.vertex, height - y).unwrap();
    }
    for arrow in &an.quiver.arrows {
        let mut attrs = Vec::new();
        if !arrow.weight.is_integer() {
            attrs.push("style=dashed".to_string());
        }
        if let Some(label) = weight_label(arrow.weight) {
            attrs.push(format!("label=\"{label}\""));
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(", ")) };
        writeln!(out, "  {} -> {}{attrs};", arrow.source, arrow.target).unwrap();
    }
    out.push_str("}\n");
    out
}
