import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";

const params = new URLSearchParams(window.location.search);
const service = params.get("service") ?? "http://127.0.0.1:8765";
const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app container");
}
const app = new ExplorerApp(root, new ApiClient(service));
void app.start();
