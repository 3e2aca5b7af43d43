/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_heatmap_free: (a: number, b: number) => void;
export const group_character_table: (a: number, b: number) => [number, number, number, number];
export const heatmap_cells: (a: number) => [number, number];
export const heatmap_cols: (a: number) => number;
export const heatmap_rows: (a: number) => number;
export const jw_trace_curves: (a: number, b: number, c: number, d: number) => [number, number];
export const scan_heatmap: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
