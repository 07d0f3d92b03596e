// Copyright 2026 The QQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef QQC_QQC_H
#define QQC_QQC_H

#include <stddef.h>
#include <stdint.h>

#if defined(QQC_BUILDING_LIBRARY)
#define QQC_API __attribute__((visibility("default")))
#else
#define QQC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every failing call also records a JSON error document,
 * {"error":{"code":"...","module":"...","message":"..."}}, readable through
 * qqc_last_error() on the same thread. */
typedef enum qqc_status {
  QQC_OK = 0,
  QQC_ERR_INVALID_ARGUMENT = 1,
  QQC_ERR_CAPACITY = 2,
  QQC_ERR_DIMENSION = 3,
  QQC_ERR_UNBOUND_SYMBOL = 4,
  QQC_ERR_IO = 5,
  QQC_ERR_PARSE = 6,
  QQC_ERR_DATA = 7,
  QQC_ERR_NUMERIC = 8,
  QQC_ERR_INTERNAL = 99
} qqc_status;

typedef struct qqc_config qqc_config;
typedef struct qqc_result qqc_result;
typedef struct qqc_kernel qqc_kernel;

QQC_API const char* qqc_version(void);

/* Error JSON of the last failed call on this thread, "" after a success. */
QQC_API const char* qqc_last_error(void);

/* Frees strings returned through char** out-parameters. NULL is allowed. */
QQC_API void qqc_string_free(char* s);

/* Experiment configs. Relative dataset paths resolve against base_dir
 * (may be NULL) or against the config file's directory. */
QQC_API qqc_status qqc_config_from_json(const char* json, const char* base_dir,
                                        qqc_config** out);
QQC_API qqc_status qqc_config_load(const char* path, qqc_config** out);
QQC_API qqc_status qqc_config_to_json(const qqc_config* config, char** out);
QQC_API void qqc_config_free(qqc_config* config);

/* Runs one experiment and writes its artifacts. resource_dir may be NULL
 * for the built-in text resources. */
QQC_API qqc_status qqc_experiment_run(const qqc_config* config, const char* resource_dir,
                                      qqc_result** out);
QQC_API qqc_status qqc_result_load(const char* result_dir, qqc_result** out);
QQC_API qqc_status qqc_result_to_json(const qqc_result* result, char** out);
QQC_API qqc_status qqc_result_accuracy(const qqc_result* result, double* train_accuracy,
                                       double* test_accuracy);
QQC_API qqc_status qqc_result_output_dir(const qqc_result* result, char** out);
QQC_API void qqc_result_free(qqc_result* result);

/* Runs a sweep file and writes the CSV outputs into output_root (NULL: the
 * QQC_OUTPUT_ROOT default). Individual failures are reported in the summary
 * JSON and do not fail the call. */
QQC_API qqc_status qqc_sweep_run(const char* sweep_path, const char* output_root,
                                 const char* resource_dir, unsigned jobs, char** summary_json);

/* Markdown comparison of every result below results_dir. */
QQC_API qqc_status qqc_report(const char* results_dir, char** report);

/* format: "tsv" or "jsonl". rows may be NULL. */
QQC_API qqc_status qqc_export_predictions(const char* result_dir, const char* format,
                                          const char* out_path, size_t* rows);

/* Raw 11-feature table for a records file. format may be NULL or "" to pick
 * by extension. */
QQC_API qqc_status qqc_featurize(const char* records_path, const char* format,
                                 const char* resource_dir, const char* out_path, size_t* rows);

/* Builds the balanced two-class split. When out_dir is not NULL, writes
 * train.tsv, test.tsv and manifest.json there. */
QQC_API qqc_status qqc_dataset_build(const char* records_path, const char* format,
                                     const char* class_a, const char* class_b, uint64_t seed,
                                     const char* out_dir, char** manifest_json);

/* Computes train and test kernels for the config's data and writes
 * kernel_train.qkm, kernel_test.qkm and kernel_report.json into out_dir
 * (NULL: the config's output directory). */
QQC_API qqc_status qqc_kernel_compute(const qqc_config* config, const char* resource_dir,
                                      const char* out_dir, char** report_json);
QQC_API qqc_status qqc_kernel_load(const char* path, qqc_kernel** out);
QQC_API qqc_status qqc_kernel_shape(const qqc_kernel* kernel, size_t* rows, size_t* cols);
QQC_API qqc_status qqc_kernel_get(const qqc_kernel* kernel, size_t row, size_t col,
                                  double* value);
QQC_API qqc_status qqc_kernel_validate(const qqc_kernel* kernel, char** report_json);
QQC_API void qqc_kernel_free(qqc_kernel* kernel);

#ifdef __cplusplus
}
#endif

#endif /* QQC_QQC_H */
