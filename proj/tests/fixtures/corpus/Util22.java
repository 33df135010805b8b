import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util22 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public long amountOf(int[] counts) {
        long amount = 0;
        for (int j = 0; j < counts.length; j++) {
            amount += counts[j];
        }
        return amount;
    }

    public List<Integer> positives(List<Integer> weights) {
        List<Integer> selected = new ArrayList<>();
        for (Integer v : weights) {
            if (v != null && v > 0) {
                selected.add(v);
            }
        }
        return selected;
    }

    public List<Integer> positives(List<Integer> data) {
        List<Integer> filtered = new ArrayList<>();
        for (Integer v : data) {
            if (v != null && v > 0) {
                filtered.add(v);
            }
        }
        return filtered;
    }

    public int abs(int delta) {
        if (delta < 0) {
            return -delta;
        } else {
            return delta;
        }
    }

    public int abs(int x) {
        if (x < 0) {
            return -x;
        } else {
            return x;
        }
    }

    public int largestValue(int[] counts) {
        int largest = counts[0];
        for (int v : counts) {
            if (v > largest) {
                largest = v;
            }
        }
        return largest;
    }

    public double average(double[] numbers) {
        if (numbers.length == 0) {
            return 0;
        }
        double acc = 0;
        for (double v : numbers) {
            acc = acc + v;
        }
        return acc / numbers.length;
    }

    public List<Integer> positives(List<Integer> weights) {
        List<Integer> kept = new ArrayList<>();
        for (Integer v : weights) {
            if (v != null && v > 0) {
                kept.add(v);
            }
        }
        return kept;
    }

    public int bestValue(int[] counts) {
        int best = counts[0];
        for (int v : counts) {
            if (v > best) {
                best = v;
            }
        }
        return best;
    }

    public String describe(int mode) {
        String text;
        switch (mode) {
        case 0:
            text = "none";
            break;
        case 1:
            text = "one";
            break;
        default:
            text = "many";
            break;
        }
        return text;
    }
}
