import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util02 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public int pick(int x, int right) {
        int result = x > right ? x : right;
        return result;
    }

    public void swap(int[] values, int a, int b) {
        int tmp = values[a];
        values[a] = values[b];
        values[b] = tmp;
    }

    public void reverse(int[] weights) {
        int left = 0;
        int right = weights.length - 1;
        while (left < right) {
            int t = weights[left];
            weights[left] = weights[right];
            weights[right] = t;
            left++;
            right--;
        }
    }

    public boolean same(String other, String expected) {
        if (other == null || expected == null) {
            return false;
        }
        return other.equals(expected);
    }

    public int abs(int diff) {
        if (diff < 0) {
            return -diff;
        } else {
            return diff;
        }
    }

    public int abs(int delta) {
        if (delta < 0) {
            return -delta;
        } else {
            return delta;
        }
    }

    public boolean same(String other, String current) {
        if (other == null || current == null) {
            return false;
        }
        return other.equals(current);
    }

    public int topValue(int[] data) {
        int top = data[0];
        for (int v : data) {
            if (v > top) {
                top = v;
            }
        }
        return top;
    }

    public long area(int width, int height) {
        long size = (long) width * height;
        int margin = width + height * 2;
        size += margin;
        return size;
    }

    public int clamp(int n, int low, int high) {
        if (n < low) {
            return low;
        }
        if (n > high) {
            return high;
        }
        return n;
    }
}
