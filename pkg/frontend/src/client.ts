/** HTTP client for the local engine service (`touchexplore serve`).
 *
 * The wire format is exactly the artifact schema: touch events go up,
 * the audio events they produced come back in order.
 */

import type { AnnotationJson, AudioEventJson, TouchEventJson } from "./types.js";

export class EngineServiceError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

async function asJson(res: Response): Promise<any> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      detail = JSON.stringify((await res.json()).detail);
    } catch {
      /* keep statusText */
    }
    throw new EngineServiceError(`engine service: ${detail}`, res.status);
  }
  return res.json();
}

export interface SessionInfo {
  sessionId: string;
  imageId: string;
  caption: string | null;
  tools: string[];
  warnings: string[];
}

export class EngineClient {
  constructor(private readonly baseUrl: string) {}

  async createSession(annotation: AnnotationJson, tools: string): Promise<SessionInfo> {
    const data = await asJson(
      await fetch(`${this.baseUrl}/session`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ annotation, tools }),
      }),
    );
    return {
      sessionId: data.session_id,
      imageId: data.image_id,
      caption: data.caption ?? null,
      tools: data.tools,
      warnings: data.warnings,
    };
  }

  async sendTouch(sessionId: string, events: TouchEventJson[]): Promise<AudioEventJson[]> {
    const data = await asJson(
      await fetch(`${this.baseUrl}/session/${sessionId}/touch`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ events }),
      }),
    );
    return data.events;
  }

  async finish(sessionId: string): Promise<AudioEventJson[]> {
    const data = await asJson(
      await fetch(`${this.baseUrl}/session/${sessionId}/finish`, { method: "POST" }),
    );
    return data.events;
  }

  async fullLog(sessionId: string): Promise<AudioEventJson[]> {
    return (await asJson(await fetch(`${this.baseUrl}/session/${sessionId}/log`))).events;
  }

  async fullTrace(sessionId: string): Promise<TouchEventJson[]> {
    return (await asJson(await fetch(`${this.baseUrl}/session/${sessionId}/trace`))).events;
  }

  async close(sessionId: string): Promise<void> {
    await asJson(await fetch(`${this.baseUrl}/session/${sessionId}`, { method: "DELETE" }));
  }
}
