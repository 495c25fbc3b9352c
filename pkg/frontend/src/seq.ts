// Last-write-wins guard for in-flight requests: a response is applied only
// if no newer request has been issued since it started.

export class LatestGate {
  private latest = 0;

  next(): number {
    this.latest += 1;
    return this.latest;
  }

  isCurrent(seq: number): boolean {
    return seq === this.latest;
  }
}
