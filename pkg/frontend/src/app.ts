/** Browser entry point: wires the canvas, the pointer, the context
 * menu, and the connection banner to the engine protocol.  The engine
 * is the single source of truth — this file holds no layout state
 * beyond the last render list it was sent. */

import { LineClient } from "./client.js";
import { BACKGROUND, caption, drawScene } from "./draw.js";
import { hitTest } from "./hit.js";
import {
  fillColorAction,
  fontSizeAction,
  hideAction,
  menuModel,
  parseHexColor,
  restoreAction,
  restoreDefaultAction,
  type MenuAction,
} from "./menu.js";
import {
  moveLine,
  pressLine,
  releaseLine,
  renderLine,
  snapshotLine,
  type RenderItem,
  type Reply,
} from "./protocol.js";

const WIDTH = 800;
const HEIGHT = 600;

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const reconnectButton = document.getElementById("reconnect") as HTMLButtonElement;
const menuPanel = document.getElementById("menu") as HTMLDivElement;
const ctx = canvas.getContext("2d") as CanvasRenderingContext2D;

let client: LineClient | null = null;
let connected = false;
let lastItems: RenderItem[] = [];
let pointerActive = false;
let moveBacklog: string | null = null;

function paint(): void {
  drawScene(ctx, lastItems, WIDTH, HEIGHT);
}

function showBanner(): void {
  banner.style.display = "flex";
}

function hideBanner(): void {
  banner.style.display = "none";
}

function applyReply(reply: Reply): void {
  if (reply.type === "render_list") {
    lastItems = reply.items;
    paint();
  } else if (reply.type === "error") {
    console.warn(`engine: ${reply.code}: ${reply.message}`);
  }
}

function flushBacklog(): void {
  if (moveBacklog === null || client === null || !client.isOpen() || client.busy) {
    return;
  }
  const line = moveBacklog;
  moveBacklog = null;
  dispatch(line);
}

/** Send one line; paint from the reply.  Disconnection drops the line
 * on the floor — the banner is already up by then. */
function dispatch(line: string): void {
  if (client === null || !connected) {
    return;
  }
  client
    .request(line)
    .then((reply) => {
      applyReply(reply);
      flushBacklog();
    })
    .catch(() => {
      moveBacklog = null;
    });
}

function handleDisconnect(): void {
  connected = false;
  pointerActive = false;
  moveBacklog = null;
  closeMenu();
  showBanner();
}

function connect(): void {
  const socket = new WebSocket(`ws://${location.host}/ws`);
  const next = new LineClient(socket);
  next.onClose = () => {
    if (client === next) {
      handleDisconnect();
    }
  };
  next
    .ready()
    .then(() => {
      client = next;
      connected = true;
      hideBanner();
      dispatch(renderLine());
    })
    .catch(() => {
      showBanner();
    });
}

// -- pointer forwarding ------------------------------------------------

function canvasPoint(ev: MouseEvent): [number, number] {
  const rect = canvas.getBoundingClientRect();
  return [ev.clientX - rect.left, ev.clientY - rect.top];
}

canvas.addEventListener("mousedown", (ev) => {
  ev.preventDefault();
  closeMenu();
  if (!connected) {
    return;
  }
  const [x, y] = canvasPoint(ev);
  if (ev.button === 0) {
    pointerActive = true;
    dispatch(pressLine(x, y, "left"));
  } else if (ev.button === 2) {
    if (hitTest(lastItems, x, y) !== null) {
      pointerActive = true;
      dispatch(pressLine(x, y, "right"));
    } else {
      openMenu(ev.clientX, ev.clientY);
    }
  }
});

canvas.addEventListener("mousemove", (ev) => {
  if (!pointerActive || !connected || client === null) {
    return;
  }
  const [x, y] = canvasPoint(ev);
  const line = moveLine(x, y);
  if (client.busy) {
    moveBacklog = line;
  } else {
    dispatch(line);
  }
});

window.addEventListener("mouseup", () => {
  if (!pointerActive) {
    return;
  }
  pointerActive = false;
  if (!connected) {
    return;
  }
  if (moveBacklog !== null) {
    const line = moveBacklog;
    moveBacklog = null;
    dispatch(line);
  }
  dispatch(releaseLine());
});

canvas.addEventListener("contextmenu", (ev) => ev.preventDefault());

// -- context menu -------------------------------------------------------

function closeMenu(): void {
  menuPanel.style.display = "none";
  menuPanel.replaceChildren();
}

function actionButton(action: MenuAction): HTMLButtonElement {
  const button = document.createElement("button");
  button.textContent = action.label;
  button.addEventListener("click", () => {
    dispatch(action.line);
    closeMenu();
  });
  return button;
}

function menuHeader(): HTMLDivElement {
  const header = document.createElement("div");
  header.className = "menu-header";
  header.textContent = "Scene menu";
  header.addEventListener("mousedown", (ev) => {
    ev.preventDefault();
    const startX = ev.clientX - menuPanel.offsetLeft;
    const startY = ev.clientY - menuPanel.offsetTop;
    const onMove = (moveEv: MouseEvent) => {
      menuPanel.style.left = `${moveEv.clientX - startX}px`;
      menuPanel.style.top = `${moveEv.clientY - startY}px`;
    };
    const onUp = () => {
      document.removeEventListener("mousemove", onMove);
      document.removeEventListener("mouseup", onUp);
    };
    document.addEventListener("mousemove", onMove);
    document.addEventListener("mouseup", onUp);
  });
  return header;
}

function openMenu(pageX: number, pageY: number): void {
  if (client === null || !connected) {
    return;
  }
  client
    .request(snapshotLine())
    .then((reply) => {
      if (reply.type !== "snapshot") {
        return;
      }
      const model = menuModel(lastItems, reply.data);
      menuPanel.replaceChildren();
      menuPanel.appendChild(menuHeader());

      const targetRow = document.createElement("div");
      targetRow.className = "menu-row";
      const select = document.createElement("select");
      for (const id of model.visibleIds) {
        const option = document.createElement("option");
        option.value = id;
        option.textContent = caption(id);
        select.appendChild(option);
      }
      targetRow.append("Object: ", select);
      menuPanel.appendChild(targetRow);

      if (model.targetId !== null) {
        const hideButton = document.createElement("button");
        const refreshHideLabel = () => {
          hideButton.textContent = hideAction(select.value).label;
        };
        refreshHideLabel();
        select.addEventListener("change", refreshHideLabel);
        hideButton.addEventListener("click", () => {
          dispatch(hideAction(select.value).line);
          closeMenu();
        });
        menuPanel.appendChild(hideButton);

        const colorRow = document.createElement("div");
        colorRow.className = "menu-row";
        const colorInput = document.createElement("input");
        colorInput.type = "color";
        colorInput.value = "#dddddd";
        const colorApply = document.createElement("button");
        colorApply.textContent = "Set fill color";
        colorApply.addEventListener("click", () => {
          dispatch(fillColorAction(select.value, parseHexColor(colorInput.value)).line);
          closeMenu();
        });
        colorRow.append(colorInput, colorApply);
        menuPanel.appendChild(colorRow);

        const fontRow = document.createElement("div");
        fontRow.className = "menu-row";
        const fontInput = document.createElement("input");
        fontInput.type = "number";
        fontInput.min = "4";
        fontInput.value = "14";
        const fontApply = document.createElement("button");
        fontApply.textContent = "Set font size";
        fontApply.addEventListener("click", () => {
          const size = Number(fontInput.value);
          if (Number.isFinite(size)) {
            dispatch(fontSizeAction(select.value, size).line);
            closeMenu();
          }
        });
        fontRow.append(fontInput, fontApply);
        menuPanel.appendChild(fontRow);
      }

      for (const id of model.hiddenIds) {
        menuPanel.appendChild(actionButton(restoreAction(id)));
      }
      menuPanel.appendChild(actionButton(restoreDefaultAction()));

      menuPanel.style.left = `${pageX}px`;
      menuPanel.style.top = `${pageY}px`;
      menuPanel.style.display = "block";
    })
    .catch(() => {
      /* disconnected; banner is up */
    });
}

document.addEventListener("mousedown", (ev) => {
  if (menuPanel.style.display !== "none" && !menuPanel.contains(ev.target as Node)) {
    closeMenu();
  }
});

// -- boot ----------------------------------------------------------------

reconnectButton.addEventListener("click", () => {
  hideBanner();
  connect();
});

canvas.width = WIDTH;
canvas.height = HEIGHT;
ctx.fillStyle = BACKGROUND;
ctx.fillRect(0, 0, WIDTH, HEIGHT);
connect();
