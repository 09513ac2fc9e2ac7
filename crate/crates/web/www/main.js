import init, { category_grid, ext_support, mutate_quiver, tilting_algebra } from "./pkg/clustertilt_web.js";

const $ = (id) => document.getElementById(id);
const NS = "http://www.w3.org/2000/svg";
const CELL_W = 62, CELL_H = 36;

let grid = null;
let quiver = null;

function el(name, attrs, parent) {
  const e = document.createElementNS(NS, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  if (parent) parent.appendChild(e);
  return e;
}

function defs(svg) {
  const d = el("defs", {}, svg);
  const m = el("marker", { id: "head", viewBox: "0 0 10 10", refX: 10, refY: 5, markerWidth: 6, markerHeight: 6, orient: "auto" }, d);
  el("path", { d: "M0,0 L10,5 L0,10 z", fill: "#888" }, m);
}

function kindRank() {
  const kind = $("kind").value;
  const rank = Number($("rank").value);
  return [kind === "E" ? "E" + rank : kind, rank];
}

function call(f, ...args) {
  try {
    $("status").textContent = "";
    return JSON.parse(f(...args));
  } catch (e) {
    $("status").textContent = String(e);
    return null;
  }
}

function position(o) {
  return [20 + (o.column + o.offset) * CELL_W, 20 + o.row * CELL_H];
}

function drawCategory() {
  grid = call(category_grid, ...kindRank());
  if (!grid) return;
  const svg = $("ar");
  svg.replaceChildren();
  defs(svg);
  svg.setAttribute("width", Math.max(400, 60 + (grid.columns + 1) * CELL_W));
  svg.setAttribute("height", 40 + grid.rank * CELL_H);
  for (const [s, t] of grid.arrows) {
    const [x1, y1] = position(grid.objects[s]);
    const [x2, y2] = position(grid.objects[t]);
    if (x2 < x1) continue; // wraps around the fundamental domain
    el("line", { class: "arrow", x1: x1 + 24, y1: y1 + 8, x2: x2 - 2, y2: y2 + 8 }, svg);
  }
  grid.objects.forEach((o, i) => {
    const [x, y] = position(o);
    const g = el("g", { class: "obj" + (o.shifted ? " shifted" : ""), id: "o" + i }, svg);
    el("rect", { x, y, width: 24, height: 16, rx: 3 }, g);
    const label = o.shifted ? o.name.replace("[1]", "") + "'" : o.name.split(",")[1].slice(4);
    el("text", { x: x + 3, y: y + 12 }, g).textContent = label;
    el("title", {}, g).textContent = o.name;
    g.addEventListener("click", () => showSupport(i));
  });
  $("tindex").value = 0;
  showAlgebra(0);
}

function clearMarks() {
  for (const g of $("ar").querySelectorAll(".obj")) g.classList.remove("sel", "ok", "ext", "summand", "tau");
}

function showSupport(i) {
  const s = call(ext_support, ...kindRank(), i);
  if (!s) return;
  clearMarks();
  for (const x of s.compatible) $("o" + x).classList.add("ok");
  for (const [x] of s.ext) $("o" + x).classList.add("ext");
  $("o" + i).classList.replace("ok", "sel");
  $("support").textContent =
    `${grid.objects[i].name}: ${s.compatible.length - 1} compatible objects, ${s.ext.length} with nonzero Ext^1 (grey)`;
}

function showAlgebra(index) {
  const [kind, rank] = kindRank();
  if (rank > 6) {
    $("tinfo").textContent = "tilting objects are listed up to rank 6";
    return;
  }
  const a = call(tilting_algebra, kind, rank, index);
  if (!a) return;
  $("tindex").value = a.index;
  $("tinfo").textContent = `${a.index + 1} of ${a.count}`;
  clearMarks();
  for (const x of a.summand_ids) $("o" + x).classList.add("summand");
  $("support").textContent = "summands in yellow";
  quiver = a.quiver;
  drawQuiver(a.summands);
  const rel = a.relations;
  $("algebra").textContent = [
    "summands: " + a.summands.join("  "),
    "zero relations: " + (rel.zero_relations.map((p) => p.map((v) => v + 1).join("")).join(", ") || "none"),
    "commutativity: " + (rel.commutativity_relations.map((c) => `${c.rho1.map((v) => v + 1).join("")} - ${c.rho2.map((v) => v + 1).join("")}`).join(", ") || "none"),
    `dimension ${a.total_dim}, beta ${a.beta}`,
    a.special_biserial ? (a.gentle ? "special biserial, gentle" : "special biserial") : "not special biserial: " + a.witness,
  ].join("\n");
}

function drawQuiver(labels) {
  const svg = $("quiver");
  svg.replaceChildren();
  defs(svg);
  const n = quiver.vertices;
  const pts = [...Array(n).keys()].map((i) => [180 + 130 * Math.cos((2 * Math.PI * i) / n - Math.PI / 2), 180 + 130 * Math.sin((2 * Math.PI * i) / n - Math.PI / 2)]);
  for (const [s, t] of quiver.arrows) {
    const [x1, y1] = pts[s - 1], [x2, y2] = pts[t - 1];
    const len = Math.hypot(x2 - x1, y2 - y1);
    const ux = (x2 - x1) / len, uy = (y2 - y1) / len;
    el("line", { class: "arrow", x1: x1 + 16 * ux, y1: y1 + 16 * uy, x2: x2 - 16 * ux, y2: y2 - 16 * uy }, svg);
  }
  pts.forEach(([x, y], i) => {
    const g = el("g", { class: "qv" }, svg);
    el("circle", { cx: x, cy: y, r: 14 }, g);
    el("text", { x: x - 4, y: y + 4 }, g).textContent = i + 1;
    if (labels) el("title", {}, g).textContent = labels[i];
    g.addEventListener("click", () => {
      const m = call(mutate_quiver, JSON.stringify(quiver), i + 1);
      if (!m) return;
      quiver = m;
      drawQuiver(null);
      $("algebra").textContent = `mutated at ${i + 1}\narrows: ` + quiver.arrows.map(([s, t]) => `${s}>${t}`).join(" ");
    });
  });
}

await init();
$("draw").addEventListener("click", drawCategory);
$("prev").addEventListener("click", () => showAlgebra(Math.max(0, Number($("tindex").value) - 1)));
$("next").addEventListener("click", () => showAlgebra(Number($("tindex").value) + 1));
$("tindex").addEventListener("change", () => showAlgebra(Number($("tindex").value)));
drawCategory();
