// Expects the wasm-bindgen output (`--target web`) in ./pkg.
import init, { coproduct, order, modified } from "./pkg/bseries_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  try {
    out.textContent = f();
    out.className = "";
  } catch (e) {
    out.textContent = String(e);
    out.className = "err";
  }
}

await init();

$("cp-go").onclick = () => show($("cp-out"), () => coproduct($("cp-alg").value, $("cp-in").value));
$("ord-go").onclick = () => show($("ord-out"), () => order($("ord-in").value, Number($("ord-n").value)));
$("mod-go").onclick = () =>
  show($("mod-out"), () => modified($("mod-in").value, $("mod-mode").value, Number($("mod-n").value)));
