import { Api } from "./api.js";
import { render } from "./render.js";
import { ViewStore } from "./state.js";

const SERVICE = (window as unknown as { CLUSTERCHAR_SERVICE?: string }).CLUSTERCHAR_SERVICE
  ?? "http://127.0.0.1:8787";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const store = new ViewStore(new Api(SERVICE));

  const redraw = () =>
    render(root, store, {
      mutate: (v) => {
        void store.mutate(v).then(redraw);
      },
      inspect: (slot) => {
        void store.inspectSlot(slot).then(redraw);
      },
      replay: () => {
        // rebuild the same state from scratch; the view must not change
        void store.replay().then((fresh) => {
          store.session = fresh.session;
          redraw();
        });
      },
    });

  await store.start();
  redraw();
}

void boot();
