/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const category_grid: (a: number, b: number, c: number) => [number, number, number, number];
export const ext_support: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const mutate_quiver: (a: number, b: number, c: number) => [number, number, number, number];
export const tilting_algebra: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
