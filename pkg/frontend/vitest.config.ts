import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    include: ['test/**/*.test.ts'],
    globalSetup: ['test/setup.ts'],
    // optimization runs are CPU-bound and deliberately long
    testTimeout: 3_600_000,
    hookTimeout: 3_600_000,
    // runs share a per-process fixture cache; keep them in one worker
    pool: 'threads',
    poolOptions: { threads: { singleThread: true } },
  },
});
