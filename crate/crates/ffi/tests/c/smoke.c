#include <stdio.h>
#include <string.h>
#include "tci.h"

#define CHECK(expr)                                                         \
  do {                                                                      \
    if (!(expr)) {                                                          \
      const char *msg = tci_last_error_message();                           \
      fprintf(stderr, "failed: %s (%s)\n", #expr, msg ? msg : "no error"); \
      return 1;                                                             \
    }                                                                       \
  } while (0)

int main(void) {
  TciElement *c = NULL;
  CHECK(tci_ch(1, 2, false, &c) == TCI_STATUS_OK);

  bool ok = false;
  CHECK(tci_element_is_identity(c, 2, &ok) == TCI_STATUS_OK && ok);
  CHECK(tci_element_is_identity(c, 3, &ok) == TCI_STATUS_OK && !ok);

  char *json = NULL;
  CHECK(tci_element_to_json(c, false, &json) == TCI_STATUS_OK);
  TciElement *back = NULL;
  CHECK(tci_element_from_json(json, &back) == TCI_STATUS_OK);
  size_t arity = 0;
  CHECK(tci_element_arity(back, &arity) == TCI_STATUS_OK && arity == 2);

  TciElement *bad = NULL;
  CHECK(tci_ch(5, 2, false, &bad) == TCI_STATUS_OUT_OF_RANGE);
  CHECK(bad == NULL && tci_last_error_message() != NULL);

  char *cert = NULL;
  CHECK(tci_reduce(2, 5, 2, "(1,3,5)(2,4)", "1,2,5", &cert) == TCI_STATUS_OK);
  CHECK(tci_check_certificate(cert, &ok) == TCI_STATUS_OK && ok);

  tci_string_free(cert);
  tci_string_free(json);
  tci_element_free(back);
  tci_element_free(c);
  puts("ok");
  return 0;
}
