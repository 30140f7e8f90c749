/// <reference types="vitest/config" />
import { defineConfig } from "vite";

// The bundle is served from the audit server's /ui mount, so asset URLs
// must be rooted there rather than at /.
export default defineConfig({
  base: "/ui/",
  build: {
    outDir: "dist",
    emptyOutDir: true,
  },
  server: {
    proxy: {
      "/api": "http://127.0.0.1:8787",
    },
  },
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
  },
});
