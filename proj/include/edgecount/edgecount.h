/*
 * edgecount C API.
 *
 * Every function returns an ec_status. On failure a message describing the
 * error is available from ec_last_error() on the same thread until the next
 * call into the library. Strings returned through `char **` out-parameters
 * are owned by the caller and released with ec_string_free(). Exact
 * integers cross the boundary as decimal strings; structured results are
 * JSON documents.
 */
#ifndef EDGECOUNT_H
#define EDGECOUNT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EDGECOUNT_BUILDING_LIBRARY)
#    define EDGECOUNT_API __declspec(dllexport)
#  else
#    define EDGECOUNT_API __declspec(dllimport)
#  endif
#else
#  define EDGECOUNT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ec_status {
  EC_OK = 0,
  EC_ERR_INTERNAL = 1,
  EC_ERR_INPUT = 2,        /* unparsable text, unknown names, bad arguments */
  EC_ERR_PRECONDITION = 3  /* valid input the operation cannot accept */
} ec_status;

typedef enum ec_count_method {
  EC_METHOD_BACKTRACK = 0,
  EC_METHOD_MATCHING = 1
} ec_count_method;

typedef struct ec_graph ec_graph;   /* multigraph, or gadget when it has dangling edges */
typedef struct ec_gadget ec_gadget; /* named gadget from the built-in library */
typedef struct ec_cnf ec_cnf;

EDGECOUNT_API const char *ec_version(void);
EDGECOUNT_API const char *ec_last_error(void);
EDGECOUNT_API void ec_string_free(char *s);

/* Graphs in the `v` / `e` / `d` line format. */
EDGECOUNT_API ec_status ec_graph_parse(const char *text, ec_graph **out);
EDGECOUNT_API void ec_graph_free(ec_graph *g);
EDGECOUNT_API ec_status ec_graph_render(const ec_graph *g, char **out);
EDGECOUNT_API ec_status ec_graph_info(const ec_graph *g, size_t *vertices,
                                      size_t *edges, size_t *dangling);
/* Degree of v, dangling edges included. */
EDGECOUNT_API ec_status ec_graph_degree(const ec_graph *g, size_t v,
                                        size_t *out);
EDGECOUNT_API ec_status ec_graph_is_regular(const ec_graph *g, unsigned r,
                                            int *out);
EDGECOUNT_API ec_status ec_graph_is_simple(const ec_graph *g, int *out);
EDGECOUNT_API ec_status ec_graph_has_bridge(const ec_graph *g, int *out);

/* Number of proper edge kappa-colorings as a decimal string. The matching
 * method requires a kappa-regular graph. */
EDGECOUNT_API ec_status ec_count(const ec_graph *g, unsigned kappa,
                                 ec_count_method method, char **decimal);
/* Extensions of a fixed boundary coloring of a gadget's dangling edges. */
EDGECOUNT_API ec_status ec_count_extensions(const ec_graph *gadget,
                                            unsigned kappa,
                                            const unsigned *boundary,
                                            size_t boundary_len,
                                            char **decimal);
/* JSON: {"kappa", "P": [P_0..P_kappa], "total"}. */
EDGECOUNT_API ec_status ec_partition_spectrum(const ec_graph *g,
                                              unsigned kappa, char **json);
/* Unique partition colorability. For kappa >= 4 the linear-time classifier
 * answers; below that the partition spectrum is used when the graph has at
 * most `spectrum_edge_cap` edges, otherwise EC_ERR_PRECONDITION. */
EDGECOUNT_API ec_status ec_unique(const ec_graph *g, unsigned kappa,
                                  size_t spectrum_edge_cap, char **json);

/* Gadgets: h3, h4, h5, hstar:<kappa>[:<n>], fnp:<kappa>:<r>. */
EDGECOUNT_API ec_status ec_gadget_by_name(const char *name, ec_gadget **out);
EDGECOUNT_API void ec_gadget_free(ec_gadget *g);
/* The gadget in the graph line format (with `d` lines). */
EDGECOUNT_API ec_status ec_gadget_export(const ec_gadget *g, char **text);
/* Key property report as JSON. */
EDGECOUNT_API ec_status ec_gadget_verify(const ec_gadget *g, unsigned kappa,
                                         char **json);

/* kappa = r edge replacement. Writes G' to *out_graph and the certificate
 * JSON to *json. With `check`, both sides are counted when G' has at most
 * `check_edge_cap` edges. */
EDGECOUNT_API ec_status ec_reduce(const ec_graph *g, unsigned kappa,
                                  unsigned r, int want_planar, int check,
                                  size_t check_edge_cap, ec_graph **out_graph,
                                  char **json);
/* Interpolation over the parallel edges of g. `gadget` may be NULL to let
 * the library choose one for (kappa, r) where r is g's regularity. */
EDGECOUNT_API ec_status ec_interpolate(const ec_graph *g, unsigned kappa,
                                       const ec_gadget *gadget, int check,
                                       size_t check_edge_cap, char **json);

/* DIMACS CNF. */
EDGECOUNT_API ec_status ec_cnf_parse(const char *text, ec_cnf **out);
EDGECOUNT_API void ec_cnf_free(ec_cnf *f);
EDGECOUNT_API ec_status ec_cnf_render(const ec_cnf *f, char **out);
EDGECOUNT_API ec_status ec_count_sat(const ec_cnf *f, unsigned cap,
                                     char **decimal);
/* Builds the formula with one extra model; *json carries both model counts.
 * EC_ERR_PRECONDITION when the transformed formula exceeds `cap` variables. */
EDGECOUNT_API ec_status ec_sat_transform(const ec_cnf *f, unsigned cap,
                                         ec_cnf **out, char **json);

#ifdef __cplusplus
}
#endif

#endif /* EDGECOUNT_H */
