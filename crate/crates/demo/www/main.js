import init, { backward, forward, series } from "./pkg/rrg_demo.js";

const el = (tag, attrs = {}, ...kids) => {
  const node = Object.assign(document.createElement(tag), attrs);
  node.append(...kids);
  return node;
};

const sum = (xs) => xs.reduce((s, x) => s + x, 0);
const show = (parts) => (parts.length ? parts.join("+") : "∅");

function triple(out, doc) {
  if (doc.error) {
    out.replaceChildren(el("p", { className: "error" }, doc.error));
    return;
  }
  const steps = (doc.trace || []).map((s) =>
    el("li", {}, `${s.dir} ${s.kind} ${s.from} → ${s.to}: ${show(s.partition)}`));
  out.replaceChildren(
    el("p", {}, `λ = ${show(doc.lambda)}  (|λ| = ${sum(doc.lambda)})`),
    el("p", {}, `β = ${show(doc.base)}  (${doc.pairs} pairs, ${doc.singletons} singletons, |β| = ${sum(doc.base)})`),
    el("p", {}, `μ = ${show(doc.mu)},  ν = ${show(doc.nu)}`),
    el("p", {}, `${steps.length} moves`),
    el("ol", {}, ...steps),
  );
}

function grid(out, doc) {
  if (doc.error) {
    out.replaceChildren(el("p", { className: "error" }, doc.error));
    return;
  }
  const head = el("tr", {}, el("th", {}, "x \\ q"), ...doc.at_x_one.map((_, q) => el("th", {}, String(q))));
  const rows = doc.grid.map((row, x) =>
    el("tr", {}, el("th", {}, String(x)), ...row.map((c) => el("td", {}, c === "0" ? "" : c))));
  const total = el("tr", {}, el("th", {}, "x=1"), ...doc.at_x_one.map((c) => el("td", {}, c)));
  const product = el("tr", {}, el("th", {}, "product"), ...doc.product.map((c) => el("td", {}, c)));
  const notes = [
    doc.product_agrees
      ? "The x=1 row equals the product side."
      : "Raise the max x degree to the max q degree to compare the x=1 row with the product side.",
    doc.brute_force_agrees === null
      ? "Brute-force check skipped at this size."
      : doc.brute_force_agrees
        ? "Every cell equals a brute-force count of partitions by weight and length."
        : "Brute-force counts disagree.",
  ];
  out.replaceChildren(
    el("div", { className: "scroll" }, el("table", {}, head, ...rows, total, product)),
    ...notes.map((n) => el("p", {}, n)),
  );
}

function bind(id, run) {
  const form = document.getElementById(`${id}-form`);
  const out = document.getElementById(`${id}-out`);
  const go = () => run(out, new FormData(form));
  form.addEventListener("submit", (e) => {
    e.preventDefault();
    go();
  });
  go();
}

await init();

bind("backward", (out, f) => triple(out, JSON.parse(backward(+f.get("a"), f.get("partition")))));
bind("forward", (out, f) =>
  triple(out, JSON.parse(forward(+f.get("a"), +f.get("pairs"), +f.get("singletons"), f.get("mu"), f.get("nu")))));
bind("series", (out, f) => grid(out, JSON.parse(series(+f.get("a"), +f.get("qmax"), +f.get("xmax")))));
